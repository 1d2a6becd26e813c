// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// The exact reduced dynamics of a register under collective dephasing: every
// density-matrix element (r, c) is multiplied by
//   exp{-Gamma * (M_r - M_c)^2} * exp{i * Theta * (M_r^2 - M_c^2)}
// where M is the total sigma_z eigenvalue of the basis state. Populations are
// untouched; coherences decay and acquire the collective phase.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dephasim/bath.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

// Total sigma_z eigenvalue M = sum_n i_n of a basis state: each 0 bit
// contributes +1, each 1 bit contributes -1, so M = n - 2 * popcount.
inline int m_sum(std::uint32_t basis_index, int n_qubits) {
  return n_qubits - 2 * std::popcount(basis_index);
}

// How the two-time propagator composes across an interval [t_a, t_b].
// The map is defined from t = 0; between measurements one must choose:
//   divisible   use the increments Gamma(t_b) - Gamma(t_a), Theta(t_b) - Theta(t_a),
//               making the family a consistent one-parameter semigroup-like flow;
//   fresh_bath  restart the bath at each measurement and use Gamma(t_b - t_a),
//               Theta(t_b - t_a), as if the environment decorrelates when the
//               register is projected.
// The two coincide on intervals starting at t_a = 0.
enum class CompositionConvention { divisible, fresh_bath };

// What happens to a qubit once it has been measured: drop it from the
// register, or keep it (collapsed) so that its coherences continue to feed
// the collective decay factors of the remaining evolution.
enum class MeasuredQubitHandling { remove, retain };

inline const char* to_string(CompositionConvention c) {
  return c == CompositionConvention::divisible ? "divisible" : "fresh-bath";
}

inline const char* to_string(MeasuredQubitHandling h) {
  return h == MeasuredQubitHandling::remove ? "remove" : "retain";
}

// Single matrix-element factor of the map.
inline complexd channel_eigenfactor(int m_r, int m_c,
                                    const DephasingFactors& f) {
  const int dm = m_r - m_c;
  const int dm_sq = m_r * m_r - m_c * m_c;
  return std::polar(std::exp(-f.gamma * static_cast<double>(dm * dm)),
                    f.theta * static_cast<double>(dm_sq));
}

// Gamma/Theta increments for the interval [t_a, t_b] under a convention.
inline DephasingFactors interval_factors(double t_a, double t_b,
                                         const BathParams& p,
                                         CompositionConvention conv) {
  if (t_a < 0.0 || t_b < t_a) {
    throw std::domain_error("interval_factors: need 0 <= t_a <= t_b");
  }
  if (conv == CompositionConvention::divisible) {
    return {gamma_closed(t_b, p) - gamma_closed(t_a, p),
            theta_closed(t_b, p) - theta_closed(t_a, p)};
  }
  return dephasing_factors(t_b - t_a, p);
}

// Applies the collective-dephasing map over [t_a, t_b] to rho.
inline DensityMatrix propagate(
    const DensityMatrix& rho, double t_a, double t_b, const BathParams& p,
    CompositionConvention conv = CompositionConvention::divisible) {
  const DephasingFactors f = interval_factors(t_a, t_b, p, conv);
  const int dim = static_cast<int>(rho.dim());

  std::vector<int> m(dim);
  for (int r = 0; r < dim; ++r) {
    m[r] = m_sum(static_cast<std::uint32_t>(r), rho.n_qubits);
  }

  Matrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      out(r, c) = rho.elements(r, c) * channel_eigenfactor(m[r], m[c], f);
    }
  }
  return DensityMatrix(rho.n_qubits, std::move(out));
}

}  // namespace dephasim
