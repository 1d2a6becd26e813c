// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Decoherence functions of an ohmic bath, J(w) = eta * w * exp(-w/w_c),
// coupled collectively to the register through sigma_z. Two channels:
//   gamma(t)  damping exponent, vacuum part + thermal part,
//   theta(t)  collective phase responsible for fidelity oscillations.
// Closed forms are the production path; adaptive quadrature of the defining
// integrals acts as an independent numerical oracle.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace dephasim {

inline constexpr double kPi = 3.14159265358979323846;

// Bath parameters in natural units (hbar = k_B = 1). Frequencies are in
// inverse time units; beta_hbar is the thermal time, with +infinity meaning
// zero temperature. Defaults are the calibration used throughout the
// reference figures: eta = 1e-3, omega_c = 100, beta_hbar = 1.
struct BathParams {
  double eta = 1e-3;
  double omega_c = 100.0;
  double beta_hbar = 1.0;

  bool zero_temperature() const { return std::isinf(beta_hbar); }

  // Thermal frequency omega_T = pi / (beta * hbar); 0 at zero temperature.
  double omega_T() const { return zero_temperature() ? 0.0 : kPi / beta_hbar; }
};

inline void validate(const BathParams& p) {
  if (!(p.eta >= 0.0)) throw std::invalid_argument("BathParams: eta must be >= 0");
  if (!(p.omega_c > 0.0)) {
    throw std::invalid_argument("BathParams: omega_c must be > 0");
  }
  if (!(p.beta_hbar > 0.0)) {
    throw std::invalid_argument("BathParams: beta_hbar must be > 0 or infinite");
  }
}

// The damping/phase pair consumed by the dephasing channel.
struct DephasingFactors {
  double gamma = 0.0;
  double theta = 0.0;
};

enum class Regime { sub_cutoff, quantum, thermal };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::sub_cutoff: return "sub-cutoff";
    case Regime::quantum: return "quantum";
    case Regime::thermal: return "thermal";
  }
  return "?";
}

inline double spectral_density(double omega, const BathParams& p) {
  if (omega < 0.0) throw std::domain_error("spectral_density: omega < 0");
  return p.eta * omega * std::exp(-omega / p.omega_c);
}

namespace detail {

// ln(sinh(x)/x), stable across the full range: series near 0, the asymptote
// x - ln(2x) once sinh would lose accuracy or overflow.
inline double log_sinhc(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return x2 / 6.0 - x2 * x2 / 180.0 + x2 * x2 * x2 / 2835.0;
  }
  if (x > 30.0) return x - std::log(2.0 * x);
  return std::log(std::sinh(x) / x);
}

// x - sin(x) without cancellation for small arguments.
inline double x_minus_sin(double x) {
  if (x < 1e-2) {
    const double x2 = x * x;
    return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
  }
  return x - std::sin(x);
}

// x - atan(x) without cancellation for small arguments.
inline double x_minus_atan(double x) {
  if (x < 1e-3) {
    const double x2 = x * x;
    return x * x2 * (1.0 / 3.0 - x2 / 5.0 + x2 * x2 / 7.0);
  }
  return x - std::atan(x);
}

}  // namespace detail

// Theta(t) = eta * (w_c t - arctan(w_c t)). Monotone nondecreasing, >= 0.
inline double theta_closed(double t, const BathParams& p) {
  if (t < 0.0) throw std::domain_error("theta_closed: t < 0");
  return p.eta * detail::x_minus_atan(p.omega_c * t);
}

// Gamma(t) = eta * ln(1 + w_c^2 t^2) + eta * ln(sinh(x)/x), x = pi t / beta_hbar.
// The first term is the vacuum (quantum-fluctuation) part, the second the
// thermal part, absent at zero temperature.
inline double gamma_closed(double t, const BathParams& p) {
  if (t < 0.0) throw std::domain_error("gamma_closed: t < 0");
  if (t == 0.0) return 0.0;
  const double wct = p.omega_c * t;
  double g = p.eta * std::log1p(wct * wct);
  if (!p.zero_temperature()) {
    g += p.eta * detail::log_sinhc(kPi * t / p.beta_hbar);
  }
  return g;
}

inline DephasingFactors dephasing_factors(double t, const BathParams& p) {
  return {gamma_closed(t, p), theta_closed(t, p)};
}

// Time regimes relative to the bath scales tau_c = 1/w_c and tau_T = 1/w_T:
// below tau_c nothing has built up yet, between the two scales vacuum
// fluctuations dominate (oscillatory fidelity), beyond tau_T thermal damping
// takes over.
inline Regime classify_regime(double t, const BathParams& p) {
  if (t < 0.0) throw std::domain_error("classify_regime: t < 0");
  if (t < 1.0 / p.omega_c) return Regime::sub_cutoff;
  const double wT = p.omega_T();
  if (wT == 0.0 || t < 1.0 / wT) return Regime::quantum;
  return Regime::thermal;
}

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double achieved, double requested)
      : std::runtime_error(
            "quadrature did not converge: achieved relative error " +
            std::to_string(achieved) + ", requested " +
            std::to_string(requested)),
        achieved_(achieved),
        requested_(requested) {}
  double achieved() const { return achieved_; }
  double requested() const { return requested_; }

 private:
  double achieved_;
  double requested_;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  int max_panels = 2'000'000;
};

namespace detail {

// Gauss-Kronrod 15(7) rule: Kronrod abscissae (positive half) and weights,
// with the embedded 7-point Gauss weights used for the error estimate.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double integral;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kGK15Nodes[i];
    double v = f(mid + dx);
    if (i < 7) v += f(mid - dx);  // i == 7 is the centre node, counted once
    kronrod += kGK15WeightsK[i] * v;
    // The embedded Gauss rule uses the odd-indexed abscissae plus the centre.
    if (i % 2 == 1) gauss += kGK15WeightsG[i / 2] * v;
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

// Adaptive integration over [0, upper] seeded with the given breakpoints,
// refining the worst panel until the summed error estimate meets rel_tol.
template <class F>
double adaptive_integrate(const F& f, std::vector<double> breakpoints,
                          const QuadratureOptions& opt) {
  std::priority_queue<Panel> queue;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Panel panel = gk15(f, breakpoints[i], breakpoints[i + 1]);
    total += panel.integral;
    total_err += panel.error;
    queue.push(panel);
  }
  int panels = static_cast<int>(queue.size());
  while (total_err > opt.rel_tol * std::abs(total) + 1e-300 &&
         panels < opt.max_panels && !queue.empty()) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  if (total_err > opt.rel_tol * std::abs(total) + 1e-300) {
    throw QuadratureError(total_err / std::max(std::abs(total), 1e-300),
                          opt.rel_tol);
  }
  return total;
}

// Breakpoints for the oscillatory integrands: the upper limit keeps the
// e^{-w/w_c} tail below 1e-10 of the total, and panels are split at the
// oscillation nodes w = k pi / t so each panel sees at most half a period.
inline std::vector<double> oscillation_breakpoints(double t,
                                                   const BathParams& p,
                                                   double min_W = 0.0) {
  const double W = std::max(
      min_W,
      p.omega_c * std::max(50.0, 20.0 + 10.0 * std::log1p(p.omega_c * t)));
  std::vector<double> pts;
  pts.push_back(0.0);
  if (t > 0.0) {
    const double spacing = kPi / t;
    for (double w = spacing; w < W; w += spacing) {
      pts.push_back(w);
      if (pts.size() > 600000) break;
    }
  }
  // Guarantee a minimum resolution of the e^{-w/w_c} envelope even when the
  // oscillation spacing is coarser than the decay scale.
  for (int j = 1; j < 32; ++j) pts.push_back(W * j / 32.0);
  pts.push_back(W);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace detail

// Gamma(t) by direct quadrature of the two integrals whose exact values are
// the closed form's terms:
//   vacuum   2 eta Int_0^inf dw e^{-w/w_c} (1 - cos(w t)) / w
//            = eta ln(1 + w_c^2 t^2),
//   thermal  eta Int_0^inf dw (coth(bh w / 2) - 1) (1 - cos(w t)) / w
//            = eta ln(sinh(pi t / bh) / (pi t / bh)),
// the second via the product formula for sinh; its kernel already decays as
// e^{-bh w}, so no cutoff factor enters. 1 - cos is evaluated as
// 2 sin^2(wt/2) and coth - 1 as 2/expm1(bh w) to avoid cancellation. The
// integrand is positive, and the thermal part vanishes at zero temperature.
inline double gamma_quad(double t, const BathParams& p,
                         const QuadratureOptions& opt = {}) {
  if (t < 0.0) throw std::domain_error("gamma_quad: t < 0");
  if (t == 0.0 || p.eta == 0.0) return 0.0;
  const bool zero_temp = p.zero_temperature();
  const double beta = p.beta_hbar;
  const auto integrand = [&](double w) {
    const double s = std::sin(0.5 * w * t);
    double kernel = 2.0 * std::exp(-w / p.omega_c);
    if (!zero_temp) kernel += 2.0 / std::expm1(beta * w);
    return p.eta * 2.0 * s * s / w * kernel;
  };
  // The thermal kernel must be resolved out to ~40/beta even when the
  // envelope scale w_c would allow a shorter range.
  const double min_W = zero_temp ? 0.0 : 40.0 / beta;
  return detail::adaptive_integrate(
      integrand, detail::oscillation_breakpoints(t, p, min_W), opt);
}

// Theta(t) by direct quadrature of
//   eta * Int_0^inf dw e^{-w/w_c} (w t - sin(w t)) / w,
// the oracle for theta_closed. Temperature does not enter.
inline double theta_quad(double t, const BathParams& p,
                         const QuadratureOptions& opt = {}) {
  if (t < 0.0) throw std::domain_error("theta_quad: t < 0");
  if (t == 0.0 || p.eta == 0.0) return 0.0;
  const auto integrand = [&](double w) {
    return p.eta * std::exp(-w / p.omega_c) * detail::x_minus_sin(w * t) / w;
  };
  return detail::adaptive_integrate(integrand,
                                    detail::oscillation_breakpoints(t, p), opt);
}

}  // namespace dephasim
