// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Walks through the fidelity-revival story on two small registers: a
// two-qubit superposition whose populations straddle distinct |M| classes
// (so its fidelity oscillates under the collective phase), and a GHZ state
// whose populations share one |M| magnitude (so it decays monotonically).
// Prints landmark values and the oscillation verdict for each state.

#include <cmath>
#include <cstdio>
#include <vector>

#include "dephasim/dephasim.hpp"

namespace {

dephasim::PureState two_qubit_superposition() {
  dephasim::Vector amps = dephasim::Vector::Zero(4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(2) = inv_sqrt2;  // |10>
  amps(3) = inv_sqrt2;  // |11>
  return dephasim::PureState(2, std::move(amps));
}

dephasim::PureState ghz3() {
  dephasim::Vector amps = dephasim::Vector::Zero(8);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(0) = inv_sqrt2;  // |000>
  amps(7) = inv_sqrt2;  // |111>
  return dephasim::PureState(3, std::move(amps));
}

void describe(const char* label, const dephasim::PureState& psi,
              const dephasim::BathParams& bath) {
  const dephasim::OscillationVerdict verdict =
      dephasim::oscillation_condition(psi);
  std::printf("%s\n", label);
  std::printf("  distinct |M| values:");
  for (int m : verdict.abs_m_values) std::printf(" %d", m);
  std::printf("\n  may oscillate: %s\n", verdict.may_oscillate ? "yes" : "no");

  std::vector<double> grid(501);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = 50.0 * static_cast<double>(i) / 500.0;
  }
  const dephasim::FidelityCurve curve =
      dephasim::fidelity_curve(psi, grid, bath);

  double min_f = 1.0, min_t = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (curve.values[i] < min_f) {
      min_f = curve.values[i];
      min_t = grid[i];
    }
  }
  std::printf("  F(15.7) = %.12f\n", dephasim::fidelity_at(psi, 15.7, bath));
  std::printf("  minimum on [0, 50]: F(%.1f) = %.12f\n\n", min_t, min_f);
}

}  // namespace

int main() {
  dephasim::BathParams bath;  // calibrated defaults

  describe("two-qubit (|10> + |11>)/sqrt(2)", two_qubit_superposition(), bath);
  describe("three-qubit GHZ", ghz3(), bath);

  // The first state re-phases almost perfectly near t = 2 pi / (4 eta
  // omega_c); the closed form makes the mechanism explicit.
  const double t_star = 15.7;
  std::printf("closed form at t = %.1f: %.12f\n", t_star,
              dephasim::closed_form_two_qubit(t_star, bath));
  return 0;
}
