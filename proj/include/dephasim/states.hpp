// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Named register states for the five-qubit MBQC protocol: the disentangled
// chain, the cluster state produced by the entangler S, the four-qubit state
// left after the first measurement, and the oscillation-condition predicate.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dephasim/channel.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

// The general input qubit alpha|0> + beta|1> fed into the protocol.
struct InputQubit {
  complexd alpha{1.0, 0.0};
  complexd beta{0.0, 0.0};

  double norm_sq() const { return std::norm(alpha) + std::norm(beta); }
};

inline void validate(const InputQubit& q) {
  if (std::abs(q.norm_sq() - 1.0) > 1e-12) {
    throw std::invalid_argument("InputQubit: not normalized");
  }
}

inline Qubit named_state(std::string_view tag) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (tag == "zero" || tag == "0") return Qubit(1.0, 0.0);
  if (tag == "one" || tag == "1") return Qubit(0.0, 1.0);
  if (tag == "plus") return Qubit(inv_sqrt2, inv_sqrt2);
  if (tag == "minus") return Qubit(inv_sqrt2, -inv_sqrt2);
  if (tag == "plus_y") return Qubit(inv_sqrt2, complexd(0.0, inv_sqrt2));
  if (tag == "minus_y") return Qubit(inv_sqrt2, complexd(0.0, -inv_sqrt2));
  throw std::invalid_argument("named_state: unknown tag '" + std::string(tag) +
                              "'");
}

// |psi_in>_1 (x) |+>_2 (x) |+>_3 (x) |+>_4 (x) |+>_5.
inline PureState build_chain(const InputQubit& q) {
  validate(q);
  Vector amps(32);
  // Qubit 1 is the most significant bit; the four |+> qubits contribute a
  // uniform factor 1/4 over the lower 16 indices.
  for (int r = 0; r < 32; ++r) {
    amps[r] = ((r & 16) ? q.beta : q.alpha) * 0.25;
  }
  return PureState(5, std::move(amps));
}

// The entangler S. On computational basis states it acts diagonally with the
// sign pattern of the circuit Z2 Z3 Z4 Z5 * CZ12 CZ23 CZ34 CZ45; applied to a
// chain this reproduces the four-term cluster-state expansion exactly (see
// the unit tests, which compare all 32 amplitudes against that expansion).
inline PureState entangle(const PureState& chain) {
  if (chain.n_qubits != 5) {
    throw std::invalid_argument("entangle: expected a 5-qubit register");
  }
  Vector amps(32);
  for (std::uint32_t r = 0; r < 32; ++r) {
    int exponent = 0;
    for (int q = 1; q <= 4; ++q) {
      const int b_here = detail::bit_at(r, detail::bit_position(q, 5));
      const int b_next = detail::bit_at(r, detail::bit_position(q + 1, 5));
      exponent += b_here * b_next;  // controlled-Z on the chain edge
      exponent += b_next;           // local Z on qubits 2..5
    }
    amps[r] = (exponent % 2 ? -1.0 : 1.0) * chain.amplitudes[r];
  }
  return PureState(5, std::move(amps));
}

// The four-qubit state of qubits 2..5 after measuring qubit 1 of the cluster
// state along |+> at t = 0, renormalized. Its closed form is the four-term
// superposition with coefficients (alpha +- beta)/2, expressed here over
// basis products of |0>/|1> on qubits 2 and 4 and |+>/|-> on qubits 3 and 5.
// Equals the projection route through project_and_renormalize up to a global
// phase; that equivalence is asserted in the tests.
inline PureState post_first_measurement(const InputQubit& q) {
  validate(q);
  const complexd sum = q.alpha + q.beta;
  const complexd dif = q.alpha - q.beta;

  const Qubit zero = named_state("zero");
  const Qubit one = named_state("one");
  const Qubit plus = named_state("plus");
  const Qubit minus = named_state("minus");

  const auto product = [](const Qubit& a, const Qubit& b, const Qubit& c,
                          const Qubit& d) {
    PureState out(1, Vector(a));
    out = tensor(out, PureState(1, Vector(b)));
    out = tensor(out, PureState(1, Vector(c)));
    return tensor(out, PureState(1, Vector(d)));
  };

  // Unnormalized coefficients are (alpha +- beta)/(2 sqrt 2); the branch has
  // probability 1/2 for every input, so renormalizing scales them by sqrt 2.
  Vector amps = Vector::Zero(16);
  amps += (sum * 0.5) * product(zero, minus, zero, minus).amplitudes;
  amps -= (sum * 0.5) * product(zero, plus, one, plus).amplitudes;
  amps -= (dif * 0.5) * product(one, plus, zero, minus).amplitudes;
  amps += (dif * 0.5) * product(one, minus, one, plus).amplitudes;
  return PureState(4, std::move(amps));
}

// Verdict of the non-monotonicity condition: a pure state's fidelity can
// oscillate only if its support spans at least two distinct |M| values.
// The condition is necessary, not sufficient.
struct OscillationVerdict {
  std::vector<int> abs_m_values;  // sorted, distinct
  bool may_oscillate = false;
};

inline OscillationVerdict oscillation_condition(const PureState& psi,
                                                double amp_tol = 1e-12) {
  if (amp_tol < 0.0) throw std::invalid_argument("oscillation_condition: amp_tol < 0");
  OscillationVerdict verdict;
  for (Eigen::Index r = 0; r < psi.dim(); ++r) {
    if (std::abs(psi.amplitudes[r]) > amp_tol) {
      verdict.abs_m_values.push_back(
          std::abs(m_sum(static_cast<std::uint32_t>(r), psi.n_qubits)));
    }
  }
  std::sort(verdict.abs_m_values.begin(), verdict.abs_m_values.end());
  verdict.abs_m_values.erase(
      std::unique(verdict.abs_m_values.begin(), verdict.abs_m_values.end()),
      verdict.abs_m_values.end());
  verdict.may_oscillate = verdict.abs_m_values.size() >= 2;
  return verdict;
}

}  // namespace dephasim
