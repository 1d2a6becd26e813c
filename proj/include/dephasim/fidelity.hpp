// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// State fidelity under the collective dephasing channel and the closed-form
// expressions the general engine is validated against.

#pragma once

#include <cmath>
#include <vector>

#include "dephasim/bath.hpp"
#include "dephasim/channel.hpp"
#include "dephasim/states.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

// F(t) = <psi0| rho(t) |psi0> for an initially pure state. Since rho(0) is
// the projector onto psi0 and the channel acts diagonally,
//   F(t) = sum_{r,c} |rho0_rc|^2 exp(-Gamma (m_r - m_c)^2)
//                                cos(Theta (m_r^2 - m_c^2)).
inline double fidelity_at(const PureState& psi0, double t,
                          const BathParams& p) {
  const DephasingFactors f = dephasing_factors(t, p);
  const int n = psi0.n_qubits;
  const Eigen::Index dim = psi0.dim();

  std::vector<int> m(static_cast<std::size_t>(dim));
  for (Eigen::Index r = 0; r < dim; ++r) {
    m[static_cast<std::size_t>(r)] = m_sum(static_cast<std::uint64_t>(r), n);
  }

  double sum = 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    const int mr = m[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < dim; ++c) {
      const int mc = m[static_cast<std::size_t>(c)];
      const double weight =
          std::norm(psi0.amplitudes[r] * std::conj(psi0.amplitudes[c]));
      if (weight == 0.0) continue;
      const int dm = mr - mc;
      sum += weight * std::exp(-f.gamma * static_cast<double>(dm * dm)) *
             std::cos(f.theta * static_cast<double>(mr * mr - mc * mc));
    }
  }
  return sum;
}

// Two-qubit Bell-type superposition (|00> + |11>)/sqrt2:
//   F(t) = 1/2 + 1/2 exp(-4 Gamma) cos(4 Theta).
inline double closed_form_two_qubit(double t, const BathParams& p) {
  const DephasingFactors f = dephasing_factors(t, p);
  return 0.5 + 0.5 * std::exp(-4.0 * f.gamma) * std::cos(4.0 * f.theta);
}

// Four-qubit register holding the post-first-measurement gate state built
// from input alpha|0> + beta|1>. With k = (conj(alpha) beta
// + alpha conj(beta))^2 the fidelity collapses to seven exponential terms.
inline double closed_form_cluster(const InputQubit& q, double t,
                                  const BathParams& p) {
  validate(q);
  const DephasingFactors f = dephasing_factors(t, p);
  const double g = f.gamma;
  const double th = f.theta;
  const double k_raw =
      (std::conj(q.alpha) * q.beta + q.alpha * std::conj(q.beta)).real();
  const double k = k_raw * k_raw;

  return (3.0 / 32.0) * std::exp(-16.0 * g) * std::cos(16.0 * th) +
         (3.0 / 8.0) * std::exp(-4.0 * g) * std::cos(4.0 * th) +
         (1.0 / 16.0 - k / 32.0) * std::exp(-36.0 * g) * std::cos(12.0 * th) +
         (1.0 / 16.0 + k / 32.0) * std::exp(-4.0 * g) * std::cos(12.0 * th) +
         (1.0 / 128.0 - k / 128.0) * std::exp(-64.0 * g) +
         (1.0 / 8.0 - k / 32.0) * std::exp(-16.0 * g) + 5.0 * k / 128.0 +
         35.0 / 128.0;
}

struct FidelityCurve {
  std::vector<double> times;
  std::vector<double> values;
};

inline FidelityCurve fidelity_curve(const PureState& psi0,
                                    const std::vector<double>& t_grid,
                                    const BathParams& p) {
  FidelityCurve curve;
  curve.times.reserve(t_grid.size());
  curve.values.reserve(t_grid.size());
  for (double t : t_grid) {
    curve.times.push_back(t);
    curve.values.push_back(fidelity_at(psi0, t, p));
  }
  return curve;
}

}  // namespace dephasim
