// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "dephasim/bath.hpp"

using namespace dephasim;

namespace {

const BathParams calibrated{};  // eta 1e-3, omega_c 100, beta_hbar 1
const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("spectral density", "[bath]") {
  BathParams p;
  p.eta = 1.0;
  p.omega_c = 3.0;

  REQUIRE(spectral_density(0.0, p) == 0.0);
  REQUIRE(std::abs(spectral_density(p.omega_c, p) - p.omega_c / std::exp(1.0)) <
          1e-14);
  REQUIRE_THROWS_AS(spectral_density(-1.0, p), std::domain_error);

  SECTION("total weight integrates to eta * omega_c^2") {
    std::vector<double> pts;
    for (int k = 0; k <= 40; ++k) pts.push_back(p.omega_c * k);
    const double total = detail::adaptive_integrate(
        [&](double w) { return spectral_density(w, p); }, pts, {});
    REQUIRE(std::abs(total - p.eta * p.omega_c * p.omega_c) <
            1e-8 * p.omega_c * p.omega_c);
  }
}

TEST_CASE("closed-form decoherence functions at the calibration point",
          "[bath]") {
  REQUIRE(gamma_closed(0.0, calibrated) == 0.0);
  REQUIRE(theta_closed(0.0, calibrated) == 0.0);

  REQUIRE(std::abs(gamma_closed(15.7, calibrated) - 0.059449129084976737) <
          1e-13);
  REQUIRE(std::abs(theta_closed(15.7, calibrated) - 1.5684298406157942) <
          1e-12);
  REQUIRE(std::abs(gamma_closed(1.0, calibrated) - 0.01051228676558023) <
          1e-13);

  const DephasingFactors f = dephasing_factors(15.7, calibrated);
  REQUIRE(f.gamma == gamma_closed(15.7, calibrated));
  REQUIRE(f.theta == theta_closed(15.7, calibrated));

  REQUIRE_THROWS_AS(gamma_closed(-1.0, calibrated), std::domain_error);
  REQUIRE_THROWS_AS(theta_closed(-1.0, calibrated), std::domain_error);
}

TEST_CASE("theta asymptote", "[bath]") {
  BathParams p;
  p.eta = 1.0;
  p.omega_c = 1.0;
  const double t = 1e4;
  REQUIRE(std::abs(theta_closed(t, p) - (t - kPi / 2.0)) < 1e-3);
}

TEST_CASE("gamma properties", "[bath]") {
  SECTION("monotone nondecreasing, and at least the vacuum part") {
    BathParams vac = calibrated;
    vac.beta_hbar = kInf;
    double prev_g = 0.0;
    double prev_th = 0.0;
    for (int i = 0; i <= 10000; ++i) {
      const double t = 60.0 * i / 10000.0;
      const double g = gamma_closed(t, calibrated);
      const double th = theta_closed(t, calibrated);
      REQUIRE(g >= prev_g - 1e-15);
      REQUIRE(th >= prev_th - 1e-15);
      REQUIRE(g >= gamma_closed(t, vac) - 1e-15);
      prev_g = g;
      prev_th = th;
    }
  }

  SECTION("zero temperature leaves only the vacuum logarithm") {
    BathParams p = calibrated;
    p.beta_hbar = kInf;
    const double t = 12.5;
    const double wct = p.omega_c * t;
    REQUIRE(std::abs(gamma_closed(t, p) - p.eta * std::log1p(wct * wct)) <
            1e-15);
    // Far beyond the cutoff the decay is algebraic: Gamma ~ 2 eta ln(w_c t).
    REQUIRE(std::abs(gamma_closed(1e3, p) - 2.0 * p.eta * std::log(1e5)) <
            1e-9);
  }

  SECTION("high-temperature limit is linear in t") {
    // At omega_T * t = 500 the thermal term dominates and
    // gamma / (eta * omega_T * t) is within 5% of 1; the logarithmic
    // vacuum and sinh corrections decay like ln(t) / t.
    BathParams p = calibrated;
    p.beta_hbar = kPi / 50.0;
    const double t = 10.0;
    const double ratio = gamma_closed(t, p) / (p.eta * p.omega_T() * t);
    REQUIRE(std::abs(ratio - 1.0) < 0.05);
  }

  SECTION("overflow guard handles huge thermal arguments") {
    BathParams p = calibrated;
    const double g = gamma_closed(1e6, p);
    REQUIRE(std::isfinite(g));
    // x - ln(2x) with x = pi t / beta_hbar, plus the vacuum term.
    const double x = kPi * 1e6 / p.beta_hbar;
    const double expect =
        p.eta * std::log1p(1e16) + p.eta * (x - std::log(2.0 * x));
    REQUIRE(std::abs(g - expect) < 1e-9 * expect);
  }
}

TEST_CASE("quadrature oracles agree with the closed forms", "[bath]") {
  SECTION("calibrated parameters") {
    for (double t : {0.01, 0.3, 1.0, 7.8, 15.7, 40.0}) {
      const double gq = gamma_quad(t, calibrated);
      const double gc = gamma_closed(t, calibrated);
      REQUIRE(std::abs(gq - gc) < 1e-6 * std::max(gc, 1e-30));
      const double tq = theta_quad(t, calibrated);
      const double tc = theta_closed(t, calibrated);
      REQUIRE(std::abs(tq - tc) < 1e-6 * std::max(tc, 1e-30));
    }
  }

  SECTION("zero temperature and unit cutoff: gamma(1) = ln 2") {
    BathParams p;
    p.eta = 1.0;
    p.omega_c = 1.0;
    p.beta_hbar = kInf;
    REQUIRE(std::abs(gamma_closed(1.0, p) - std::log(2.0)) < 1e-15);
    REQUIRE(std::abs(gamma_quad(1.0, p) - std::log(2.0)) < 1e-6);
  }

  SECTION("a second parameter set off the calibration") {
    BathParams p;
    p.eta = 0.1;
    p.omega_c = 10.0;
    p.beta_hbar = 2.0;
    for (double t : {0.05, 1.0, 10.0}) {
      const double gq = gamma_quad(t, p);
      const double gc = gamma_closed(t, p);
      REQUIRE(std::abs(gq - gc) < 1e-6 * std::max(gc, 1e-30));
    }
  }

  SECTION("t = 0 short-circuits to zero") {
    REQUIRE(gamma_quad(0.0, calibrated) == 0.0);
    REQUIRE(theta_quad(0.0, calibrated) == 0.0);
  }
}

TEST_CASE("quadrature failure is reported, not swallowed", "[bath]") {
  QuadratureOptions opt;
  opt.rel_tol = 1e-18;
  opt.max_panels = 4;
  REQUIRE_THROWS_AS(gamma_quad(10.0, calibrated, opt), QuadratureError);
  try {
    gamma_quad(10.0, calibrated, opt);
  } catch (const QuadratureError& e) {
    REQUIRE(e.requested() == 1e-18);
    REQUIRE(e.achieved() > e.requested());
  }
}

TEST_CASE("time regimes", "[bath]") {
  // omega_c = 100 and omega_T = 1 (beta_hbar = pi).
  BathParams p;
  p.eta = 1e-3;
  p.omega_c = 100.0;
  p.beta_hbar = kPi;
  REQUIRE(std::abs(p.omega_T() - 1.0) < 1e-15);
  REQUIRE(classify_regime(0.005, p) == Regime::sub_cutoff);
  REQUIRE(classify_regime(0.5, p) == Regime::quantum);
  REQUIRE(classify_regime(2.0, p) == Regime::thermal);

  SECTION("zero temperature never reaches the thermal regime") {
    BathParams z = p;
    z.beta_hbar = kInf;
    REQUIRE(classify_regime(1e9, z) == Regime::quantum);
  }
}

TEST_CASE("bath parameter validation", "[bath]") {
  BathParams p;
  p.eta = -0.1;
  REQUIRE_THROWS_AS(validate(p), std::invalid_argument);
  p = BathParams{};
  p.omega_c = 0.0;
  REQUIRE_THROWS_AS(validate(p), std::invalid_argument);
  p = BathParams{};
  p.beta_hbar = -1.0;
  REQUIRE_THROWS_AS(validate(p), std::invalid_argument);
  p = BathParams{};
  p.beta_hbar = kInf;
  REQUIRE_NOTHROW(validate(p));
  REQUIRE(p.zero_temperature());
  REQUIRE(p.omega_T() == 0.0);
}
