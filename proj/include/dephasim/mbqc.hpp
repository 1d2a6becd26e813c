// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Measurement-based single-qubit gates on the five-qubit chain cluster:
// measurement bases, the gate catalog (NOT, HADAMARD, PHASE, general Euler
// rotation), the two measurement-timing scenarios, and the gate fidelity of
// the output qubit against the ideal target.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "dephasim/channel.hpp"
#include "dephasim/fidelity.hpp"
#include "dephasim/states.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

// B(phi) = {(|0> + e^{i phi}|1>)/sqrt2, (|0> - e^{i phi}|1>)/sqrt2}.
// The first element is the "up" outcome.
inline std::pair<Qubit, Qubit> measurement_basis(double phi) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const complexd phase = std::polar(1.0, phi);
  return {Qubit(inv_sqrt2, inv_sqrt2 * phase),
          Qubit(inv_sqrt2, -inv_sqrt2 * phase)};
}

namespace detail {

inline Eigen::Matrix2cd rotation_x(double angle) {
  // exp(-i angle X / 2)
  Eigen::Matrix2cd u;
  const double c = std::cos(0.5 * angle);
  const complexd s(0.0, -std::sin(0.5 * angle));
  u << c, s, s, c;
  return u;
}

inline Eigen::Matrix2cd rotation_z(double angle) {
  // exp(-i angle Z / 2)
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::polar(1.0, -0.5 * angle);
  u(1, 1) = std::polar(1.0, 0.5 * angle);
  return u;
}

}  // namespace detail

// A single-qubit MBQC gate: the basis angles (phi_2, phi_3, phi_4) in which
// qubits 2..4 are measured, the unitary the all-up branch realizes on the
// output qubit, and the reference input used in the published fidelity runs.
struct GateSpec {
  std::string name;
  std::array<double, 3> basis_angles{0.0, 0.0, 0.0};
  Eigen::Matrix2cd ideal_unitary = Eigen::Matrix2cd::Identity();
  InputQubit reference_input;
};

// The general Euler rotation U(xi, eta, zeta) = U_x(zeta) U_z(eta) U_x(xi),
// realized by measuring qubits 2..4 in B(-xi), B(eta), B(zeta).
inline GateSpec make_euler_gate(double xi, double eta, double zeta) {
  GateSpec g;
  g.name = "euler";
  g.basis_angles = {-xi, eta, zeta};
  g.ideal_unitary = detail::rotation_x(zeta) * detail::rotation_z(eta) *
                    detail::rotation_x(xi);
  g.reference_input = InputQubit{1.0, 0.0};
  return g;
}

// Catalog gates are defined by their explicit up-projectors:
//   NOT       (|->, |+>, |+>)        on input |0>, target |1>
//   HADAMARD  (|-,y>, |+,y>, |+>)    on input |0>, target (|0>+|1>)/sqrt2
//   PHASE     (|+>, |+,y>, |+>)      on input |+>, target (|0>+i|1>)/sqrt2
// Each coincides with an Euler instance (pi,0,0), (pi/2,pi/2,0), (0,pi/2,0);
// the ideal unitary is the realized rotation, which maps the reference input
// to the target up to a global phase.
inline GateSpec gate_catalog(std::string_view name) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  if (name == "not") {
    GateSpec g = make_euler_gate(kPi, 0.0, 0.0);
    g.name = "not";
    g.reference_input = InputQubit{1.0, 0.0};
    return g;
  }
  if (name == "hadamard") {
    GateSpec g = make_euler_gate(kPi / 2.0, kPi / 2.0, 0.0);
    g.name = "hadamard";
    g.reference_input = InputQubit{1.0, 0.0};
    return g;
  }
  if (name == "phase") {
    GateSpec g = make_euler_gate(0.0, kPi / 2.0, 0.0);
    g.name = "phase";
    g.reference_input = InputQubit{inv_sqrt2, inv_sqrt2};
    return g;
  }
  throw std::invalid_argument("gate_catalog: unknown gate '" +
                              std::string(name) + "'");
}

inline PureState ideal_output(const GateSpec& g, const InputQubit& q) {
  validate(q);
  const Eigen::Vector2cd in(q.alpha, q.beta);
  const Eigen::Vector2cd out = g.ideal_unitary * in;
  Vector amps(2);
  amps << out[0], out[1];
  return PureState(1, std::move(amps));
}

// When and in what order the three gate measurements happen, which outcome
// branch is followed, and the composition/bookkeeping conventions in force.
struct MeasurementSchedule {
  enum class Mode { simultaneous, distinct_times };

  Mode mode = Mode::simultaneous;
  double t_gap = 0.0;                  // simultaneous: single waiting time
  std::array<double, 3> times{0, 0, 0};  // distinct_times: t1 <= t2 <= t3
  // Outcome of the four measurements (qubit 1, then qubits 2..4);
  // true = "up". The published numbers all use the all-up branch.
  std::array<bool, 4> outcome_branch{true, true, true, true};
  CompositionConvention convention = CompositionConvention::divisible;
  MeasuredQubitHandling handling = MeasuredQubitHandling::remove;

  static MeasurementSchedule simultaneous(double gap) {
    MeasurementSchedule s;
    s.mode = Mode::simultaneous;
    s.t_gap = gap;
    return s;
  }

  static MeasurementSchedule at_times(double t1, double t2, double t3) {
    MeasurementSchedule s;
    s.mode = Mode::distinct_times;
    s.times = {t1, t2, t3};
    return s;
  }
};

inline void validate(const MeasurementSchedule& s) {
  if (s.mode == MeasurementSchedule::Mode::simultaneous) {
    if (s.t_gap < 0.0) {
      throw std::invalid_argument("MeasurementSchedule: t_gap < 0");
    }
    return;
  }
  if (s.times[0] < 0.0 || s.times[0] > s.times[1] || s.times[1] > s.times[2]) {
    throw std::invalid_argument(
        "MeasurementSchedule: need 0 <= t1 <= t2 <= t3");
  }
}

struct GateRunResult {
  std::string gate;
  InputQubit input;
  MeasurementSchedule schedule;
  double branch_probability = 0.0;
  double gate_fidelity = 0.0;
  DensityMatrix output_state;  // the single output qubit
};

// Runs one gate. The register starts as the chain, is entangled, and qubit 1
// is measured along |+> (or |-> for the down branch) at t = 0, which always
// succeeds with probability 1/2. The remaining four qubits dephase
// collectively between the scheduled measurements of qubits 2..4; the output
// appears on qubit 5. Fidelity is conditional on the realized branch.
inline GateRunResult run_gate(const GateSpec& g, const InputQubit& q,
                              const MeasurementSchedule& s,
                              const BathParams& p) {
  validate(q);
  validate(s);

  PureState start(4, Vector::Zero(16));
  double probability = 0.0;
  if (s.outcome_branch[0]) {
    start = post_first_measurement(q);
    probability = 0.5;
  } else {
    auto [projected, prob] =
        project_pure(entangle(build_chain(q)), 1, named_state("minus"));
    start = std::move(projected);
    probability = prob;
  }

  DensityMatrix rho = outer(start);

  std::array<double, 3> stop_times;
  if (s.mode == MeasurementSchedule::Mode::simultaneous) {
    stop_times = {s.t_gap, s.t_gap, s.t_gap};
  } else {
    stop_times = s.times;
  }

  const bool retain = s.handling == MeasuredQubitHandling::retain;
  double clock = 0.0;
  for (int step = 0; step < 3; ++step) {
    rho = propagate(rho, clock, stop_times[step], p, s.convention);
    clock = stop_times[step];

    const auto basis = measurement_basis(g.basis_angles[step]);
    const Qubit& axis = s.outcome_branch[step + 1] ? basis.first : basis.second;
    // After the first measurement the register holds former qubits 2..5, so
    // the target of step k is local qubit k+1 when measured qubits are
    // retained, and always local qubit 1 when they are removed.
    if (retain) {
      auto [next, prob] = project_and_retain(rho, step + 1, axis);
      rho = std::move(next);
      probability *= prob;
    } else {
      auto [next, prob] = project_and_renormalize(rho, 1, axis);
      rho = std::move(next);
      probability *= prob;
    }
  }

  if (retain) {
    // Trace out the three collapsed qubits, leaving the output qubit.
    rho = partial_trace(partial_trace(partial_trace(rho, 1), 1), 1);
  }

  GateRunResult result;
  result.gate = g.name;
  result.input = q;
  result.schedule = s;
  result.branch_probability = probability;
  result.output_state = rho;
  result.gate_fidelity = overlap(rho, ideal_output(g, q));
  return result;
}

// Gate fidelity as a function of the schedule parameter. Simultaneous mode
// sweeps t_gap directly; distinct_times mode sweeps the symmetric triple
// (t - delta, t, t + delta), clamped at zero.
inline FidelityCurve gate_fidelity_curve(
    const GateSpec& g, const InputQubit& q, MeasurementSchedule::Mode mode,
    const std::vector<double>& t_grid, const BathParams& p,
    CompositionConvention conv = CompositionConvention::divisible,
    MeasuredQubitHandling handling = MeasuredQubitHandling::remove,
    double delta = 0.2) {
  FidelityCurve curve;
  curve.times.reserve(t_grid.size());
  curve.values.reserve(t_grid.size());
  for (double t : t_grid) {
    MeasurementSchedule s =
        mode == MeasurementSchedule::Mode::simultaneous
            ? MeasurementSchedule::simultaneous(t)
            : MeasurementSchedule::at_times(std::max(0.0, t - delta), t,
                                            t + delta);
    s.convention = conv;
    s.handling = handling;
    curve.times.push_back(t);
    curve.values.push_back(run_gate(g, q, s, p).gate_fidelity);
  }
  return curve;
}

}  // namespace dephasim
