// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "dephasim/mbqc.hpp"

using namespace dephasim;

namespace {

const BathParams calibrated{};

bool matches_up_to_phase(const Qubit& a, const Qubit& b) {
  const complexd ip = a.adjoint() * b;
  return std::abs(std::abs(ip) - 1.0) < 1e-12;
}

MeasurementSchedule distinct(const std::array<double, 3>& t,
                             CompositionConvention conv,
                             MeasuredQubitHandling handling) {
  MeasurementSchedule s = MeasurementSchedule::at_times(t[0], t[1], t[2]);
  s.convention = conv;
  s.handling = handling;
  return s;
}

}  // namespace

TEST_CASE("measurement bases", "[mbqc]") {
  SECTION("phi = 0 gives |+>, |->") {
    const auto [up, down] = measurement_basis(0.0);
    REQUIRE((up - named_state("plus")).norm() < 1e-15);
    REQUIRE((down - named_state("minus")).norm() < 1e-15);
  }

  SECTION("phi = pi/2 gives |+,y>, |-,y>") {
    const auto [up, down] = measurement_basis(kPi / 2.0);
    REQUIRE((up - named_state("plus_y")).norm() < 1e-15);
    REQUIRE((down - named_state("minus_y")).norm() < 1e-15);
  }

  SECTION("orthonormal for arbitrary phi") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 20; ++trial) {
      const auto [up, down] = measurement_basis(angle(rng));
      REQUIRE(std::abs(up.norm() - 1.0) < 1e-14);
      REQUIRE(std::abs(down.norm() - 1.0) < 1e-14);
      REQUIRE(std::abs((up.adjoint() * down)(0)) < 1e-14);
    }
  }
}

TEST_CASE("gate catalog projectors and targets", "[mbqc]") {
  SECTION("NOT measures (|->, |+>, |+>) and maps |0> to |1>") {
    const GateSpec g = gate_catalog("not");
    const auto b2 = measurement_basis(g.basis_angles[0]).first;
    const auto b3 = measurement_basis(g.basis_angles[1]).first;
    const auto b4 = measurement_basis(g.basis_angles[2]).first;
    REQUIRE(matches_up_to_phase(b2, named_state("minus")));
    REQUIRE(matches_up_to_phase(b3, named_state("plus")));
    REQUIRE(matches_up_to_phase(b4, named_state("plus")));
    const PureState out = ideal_output(g, InputQubit{1.0, 0.0});
    REQUIRE(matches_up_to_phase(Qubit(out.amplitudes[0], out.amplitudes[1]),
                                named_state("one")));
  }

  SECTION("HADAMARD measures (|-,y>, |+,y>, |+>) and maps |0> to |+>") {
    const GateSpec g = gate_catalog("hadamard");
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[0]).first,
                                named_state("minus_y")));
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[1]).first,
                                named_state("plus_y")));
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[2]).first,
                                named_state("plus")));
    const PureState out = ideal_output(g, InputQubit{1.0, 0.0});
    REQUIRE(matches_up_to_phase(Qubit(out.amplitudes[0], out.amplitudes[1]),
                                named_state("plus")));
  }

  SECTION("PHASE measures (|+>, |+,y>, |+>) and maps |+> to |+,y>") {
    const GateSpec g = gate_catalog("phase");
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[0]).first,
                                named_state("plus")));
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[1]).first,
                                named_state("plus_y")));
    REQUIRE(matches_up_to_phase(measurement_basis(g.basis_angles[2]).first,
                                named_state("plus")));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const PureState out =
        ideal_output(g, InputQubit{inv_sqrt2, inv_sqrt2});
    REQUIRE(matches_up_to_phase(Qubit(out.amplitudes[0], out.amplitudes[1]),
                                named_state("plus_y")));
  }

  SECTION("ideal unitaries are unitary") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::vector<GateSpec> gates{gate_catalog("not"), gate_catalog("hadamard"),
                                gate_catalog("phase")};
    for (int trial = 0; trial < 5; ++trial) {
      gates.push_back(make_euler_gate(angle(rng), angle(rng), angle(rng)));
    }
    for (const GateSpec& g : gates) {
      const Eigen::Matrix2cd defect =
          g.ideal_unitary.adjoint() * g.ideal_unitary -
          Eigen::Matrix2cd::Identity();
      REQUIRE(defect.cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SECTION("unknown gate is rejected") {
    REQUIRE_THROWS_AS(gate_catalog("toffoli"), std::invalid_argument);
  }
}

TEST_CASE("schedule validation", "[mbqc]") {
  MeasurementSchedule s = MeasurementSchedule::simultaneous(-0.1);
  REQUIRE_THROWS_AS(validate(s), std::invalid_argument);
  s = MeasurementSchedule::at_times(3.0, 2.0, 4.0);
  REQUIRE_THROWS_AS(validate(s), std::invalid_argument);
  s = MeasurementSchedule::at_times(-1.0, 2.0, 4.0);
  REQUIRE_THROWS_AS(validate(s), std::invalid_argument);
  REQUIRE_NOTHROW(validate(MeasurementSchedule::at_times(1.0, 1.0, 4.0)));
}

TEST_CASE("zero-time identities", "[mbqc]") {
  for (const char* name : {"not", "hadamard", "phase"}) {
    const GateSpec g = gate_catalog(name);
    for (auto conv :
         {CompositionConvention::divisible, CompositionConvention::fresh_bath}) {
      for (auto handling :
           {MeasuredQubitHandling::remove, MeasuredQubitHandling::retain}) {
        MeasurementSchedule sim = MeasurementSchedule::simultaneous(0.0);
        sim.convention = conv;
        sim.handling = handling;
        const GateRunResult r1 = run_gate(g, g.reference_input, sim, calibrated);
        REQUIRE(std::abs(r1.gate_fidelity - 1.0) < 1e-12);
        REQUIRE(std::abs(r1.branch_probability - 0.0625) < 1e-12);

        const GateRunResult r2 = run_gate(
            g, g.reference_input, distinct({0, 0, 0}, conv, handling),
            calibrated);
        REQUIRE(std::abs(r2.gate_fidelity - 1.0) < 1e-12);
        REQUIRE(std::abs(r2.branch_probability - 0.0625) < 1e-12);
      }
    }
  }
}

TEST_CASE("arbitrary Euler rotations are exact without decoherence",
          "[mbqc]") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GateSpec g = make_euler_gate(angle(rng), angle(rng), angle(rng));
    complexd a(gauss(rng), gauss(rng));
    complexd b(gauss(rng), gauss(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    const InputQubit q{a / n, b / n};
    const GateRunResult r =
        run_gate(g, q, MeasurementSchedule::simultaneous(0.0), calibrated);
    REQUIRE(std::abs(r.gate_fidelity - 1.0) < 1e-12);
    REQUIRE(std::abs(r.branch_probability - 0.0625) < 1e-12);
  }
}

TEST_CASE("non-up branches stay normalized", "[mbqc]") {
  const GateSpec g = gate_catalog("not");
  std::array<std::array<bool, 4>, 3> branches{{{false, true, true, true},
                                               {true, false, true, false},
                                               {false, false, false, false}}};
  for (const auto& branch : branches) {
    MeasurementSchedule s = MeasurementSchedule::simultaneous(0.0);
    s.outcome_branch = branch;
    const GateRunResult r = run_gate(g, g.reference_input, s, calibrated);
    REQUIRE(std::abs(r.branch_probability - 0.0625) < 1e-12);
    REQUIRE(std::abs(r.output_state.trace_real() - 1.0) < 1e-12);
    REQUIRE(r.output_state.min_eigenvalue() >= -1e-10);
  }
}

TEST_CASE("distinct times collapse to the simultaneous scenario", "[mbqc]") {
  const double t = 7.3;
  for (const char* name : {"not", "phase"}) {
    const GateSpec g = gate_catalog(name);
    for (auto conv :
         {CompositionConvention::divisible, CompositionConvention::fresh_bath}) {
      for (auto handling :
           {MeasuredQubitHandling::remove, MeasuredQubitHandling::retain}) {
        MeasurementSchedule sim = MeasurementSchedule::simultaneous(t);
        sim.convention = conv;
        sim.handling = handling;
        const double f_sim =
            run_gate(g, g.reference_input, sim, calibrated).gate_fidelity;
        const double f_eq =
            run_gate(g, g.reference_input, distinct({t, t, t}, conv, handling),
                     calibrated)
                .gate_fidelity;
        REQUIRE(std::abs(f_sim - f_eq) < 1e-14);
      }
    }
  }
}

TEST_CASE("reference fidelities for the six distinct-time schedules",
          "[mbqc]") {
  const std::array<std::array<double, 3>, 6> schedules{{{6, 8, 10},
                                                        {14, 16, 18},
                                                        {15.2, 15.7, 16.2},
                                                        {15.5, 15.7, 15.9},
                                                        {7.8, 23.4, 39},
                                                        {15.7, 31.4, 47.1}}};

  struct Row {
    CompositionConvention conv;
    MeasuredQubitHandling handling;
    const char* gate;
    std::array<double, 6> fidelity;
  };
  const auto div = CompositionConvention::divisible;
  const auto fresh = CompositionConvention::fresh_bath;
  const auto remove = MeasuredQubitHandling::remove;
  const auto retain = MeasuredQubitHandling::retain;

  const std::vector<Row> table{
      {div, remove, "not",
       {0.565566638488, 0.489603259754, 0.901045868444, 0.924840495219,
        0.738132275542, 0.763394501541}},
      {div, remove, "hadamard",
       {0.762023670802, 0.637285400577, 0.876525253022, 0.877239638342,
        0.300426771309, 0.732130017304}},
      {div, remove, "phase",
       {0.285333379629, 0.907102803407, 0.969401426298, 0.966956937786,
        0.460184075371, 0.867722787230}},
      {div, retain, "not",
       {0.350692785155, 0.527658939091, 0.854778928798, 0.916776139564,
        0.737144309900, 0.763387037004}},
      {div, retain, "hadamard",
       {0.383847939657, 0.519365986818, 0.835008781548, 0.870786955176,
        0.300865378222, 0.732124453094}},
      {div, retain, "phase",
       {0.480793887666, 0.657938245861, 0.944872700306, 0.962618503048,
        0.460941988470, 0.867719187690}},
      {fresh, remove, "not",
       {0.546782059872, 0.502315094272, 0.877183524293, 0.902723812040,
        0.723326965295, 0.740805258592}},
      {fresh, remove, "hadamard",
       {0.681499419436, 0.636493646360, 0.851276664294, 0.856661818102,
        0.310803542942, 0.713368349057}},
      {fresh, remove, "phase",
       {0.300752604625, 0.892826516632, 0.954704663230, 0.953714734075,
        0.477355425231, 0.852611823002}},
      {fresh, retain, "not",
       {0.354018836335, 0.529863174198, 0.836934704685, 0.896260626470,
        0.722093555393, 0.740745644710}},
      {fresh, retain, "hadamard",
       {0.388203289234, 0.521016745125, 0.814013680889, 0.851345961732,
        0.311318218633, 0.713325539110}},
      {fresh, retain, "phase",
       {0.480457757559, 0.656187117597, 0.933773332116, 0.950381142557,
        0.478074463414, 0.852582819842}},
  };

  for (const Row& row : table) {
    const GateSpec g = gate_catalog(row.gate);
    for (std::size_t i = 0; i < schedules.size(); ++i) {
      const GateRunResult r = run_gate(
          g, g.reference_input, distinct(schedules[i], row.conv, row.handling),
          calibrated);
      INFO(row.gate << " " << to_string(row.conv) << "/"
                    << to_string(row.handling) << " schedule " << i);
      REQUIRE(std::abs(r.gate_fidelity - row.fidelity[i]) < 1e-9);
    }
  }

  SECTION("branch probabilities at (6, 8, 10) for NOT") {
    const GateSpec g = gate_catalog("not");
    const GateRunResult fresh_retain = run_gate(
        g, g.reference_input, distinct({6, 8, 10}, fresh, retain), calibrated);
    REQUIRE(std::abs(fresh_retain.branch_probability - 0.069543285763758) <
            1e-9);
    const GateRunResult div_remove = run_gate(
        g, g.reference_input, distinct({6, 8, 10}, div, remove), calibrated);
    REQUIRE(std::abs(div_remove.branch_probability - 0.049179595074714) <
            1e-9);
  }
}

TEST_CASE("reference fidelities for the simultaneous scenario", "[mbqc]") {
  struct Point {
    const char* gate;
    double t_gap;
    double fidelity;
  };
  const std::vector<Point> points{
      {"not", 0.8, 0.931306552486},      {"not", 5.8, 0.702520849024},
      {"not", 15.7, 0.930357906646},     {"not", 31.4, 0.871578032401},
      {"not", 47.1, 0.835252455748},     {"hadamard", 7.8, 0.192940501647},
      {"hadamard", 15.7, 0.870471064181}, {"hadamard", 23.5, 0.289625503579},
      {"hadamard", 31.4, 0.805014098830}, {"hadamard", 39.2, 0.343115038273},
      {"hadamard", 47.1, 0.758922246444}, {"phase", 8.4, 0.224265380082},
      {"phase", 15.9, 0.965505202240},   {"phase", 24.8, 0.345751166075},
      {"phase", 31.6, 0.952313626378},   {"phase", 40.4, 0.440259476064},
      {"phase", 47.3, 0.930541334702},
  };
  for (const Point& pt : points) {
    const GateSpec g = gate_catalog(pt.gate);
    const GateRunResult r = run_gate(
        g, g.reference_input, MeasurementSchedule::simultaneous(pt.t_gap),
        calibrated);
    INFO(pt.gate << " at t_gap " << pt.t_gap);
    REQUIRE(std::abs(r.gate_fidelity - pt.fidelity) < 1e-9);
  }

  SECTION("the waiting-time fidelity is convention independent") {
    const GateSpec g = gate_catalog("phase");
    MeasurementSchedule s = MeasurementSchedule::simultaneous(15.9);
    s.convention = CompositionConvention::fresh_bath;
    s.handling = MeasuredQubitHandling::retain;
    const GateRunResult r = run_gate(g, g.reference_input, s, calibrated);
    REQUIRE(std::abs(r.gate_fidelity - 0.965505202240) < 1e-9);
  }
}

TEST_CASE("gate fidelity curves", "[mbqc]") {
  const GateSpec g = gate_catalog("not");

  SECTION("starts at one") {
    const FidelityCurve curve = gate_fidelity_curve(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, {0.0},
        calibrated);
    REQUIRE(std::abs(curve.values[0] - 1.0) < 1e-12);
  }

  SECTION("distinct-times sweep uses the symmetric triple") {
    const double t = 9.0;
    const double delta = 0.2;
    const FidelityCurve curve = gate_fidelity_curve(
        g, g.reference_input, MeasurementSchedule::Mode::distinct_times, {t},
        calibrated, CompositionConvention::divisible,
        MeasuredQubitHandling::remove, delta);
    const GateRunResult direct = run_gate(
        g, g.reference_input,
        distinct({t - delta, t, t + delta}, CompositionConvention::divisible,
                 MeasuredQubitHandling::remove),
        calibrated);
    REQUIRE(std::abs(curve.values[0] - direct.gate_fidelity) < 1e-14);
  }

  SECTION("no jumps on a fine grid") {
    std::vector<double> grid;
    for (int i = 0; i <= 300; ++i) grid.push_back(3.0 * i / 300.0);
    const FidelityCurve curve = gate_fidelity_curve(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, grid,
        calibrated);
    for (std::size_t i = 1; i < curve.values.size(); ++i) {
      REQUIRE(std::abs(curve.values[i] - curve.values[i - 1]) < 0.02);
    }
  }
}
