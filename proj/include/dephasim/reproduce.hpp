// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// The reference reproduction table: every published number this library is
// expected to reproduce, checked at its stated tolerance, plus the
// property-based fallback used when the timing-convention discrimination is
// inconclusive. The same report backs the standalone acceptance binary and
// the `reproduce-paper` CLI subcommand.
//
// Fallback semantics: the published gate-fidelity values for the
// distinct-times runs assume a composition bookkeeping the source text never
// states explicitly. All four bookkeeping variants are run; if none matches
// every quoted value, criteria 4-7 downgrade to requiring that the
// peak/valley *positions* of the fidelity curves match the published times
// within +/- 0.3, while the quoted values are still reported together with
// their discrepancies. A downgraded pass is flagged loudly; it is never
// folded into a plain pass.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dephasim/bath.hpp"
#include "dephasim/channel.hpp"
#include "dephasim/fidelity.hpp"
#include "dephasim/mbqc.hpp"
#include "dephasim/scheduler.hpp"
#include "dephasim/states.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

struct CheckLine {
  std::string label;
  std::string requirement;
  double actual = 0.0;
  bool passed = false;
  bool informational = false;  // reported, but not counted toward the verdict
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;      // criterion met as originally stated
  bool downgraded = false;  // evaluated under the position-based fallback
  bool fallback_passed = false;
  std::vector<CheckLine> lines;           // value checks
  std::vector<CheckLine> fallback_lines;  // position checks when downgraded
  std::vector<std::string> notes;

  bool effective_pass() const {
    return passed || (downgraded && fallback_passed);
  }
};

struct ReproduceReport {
  std::vector<CriterionOutcome> criteria;
  bool downgrade_applied = false;
  std::string convention_record;

  bool all_passed() const {
    for (const auto& c : criteria) {
      if (!c.effective_pass()) return false;
    }
    return true;
  }
};

namespace detail {

inline CheckLine approx_line(std::string label, double actual, double expected,
                             double tol) {
  std::ostringstream req;
  req << "= " << expected << " +/- " << tol;
  return {std::move(label), req.str(), actual,
          std::abs(actual - expected) <= tol, false};
}

inline CheckLine at_most_line(std::string label, double actual, double bound) {
  std::ostringstream req;
  req << "<= " << bound;
  return {std::move(label), req.str(), actual, actual <= bound, false};
}

inline CheckLine above_line(std::string label, double actual, double bound) {
  std::ostringstream req;
  req << "> " << bound;
  return {std::move(label), req.str(), actual, actual > bound, false};
}

inline CheckLine below_line(std::string label, double actual, double bound) {
  std::ostringstream req;
  req << "< " << bound;
  return {std::move(label), req.str(), actual, actual < bound, false};
}

inline CheckLine info_line(std::string label, double actual,
                           std::string requirement = "(informational)") {
  return {std::move(label), std::move(requirement), actual, true, true};
}

inline bool all_lines_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    if (!l.informational && !l.passed) return false;
  }
  return true;
}

inline std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> g(static_cast<std::size_t>(count));
  if (count == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < count; ++i) {
    g[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return g;
}

inline std::vector<double> logspace(double lo, double hi, int count) {
  std::vector<double> g = linspace(std::log(lo), std::log(hi), count);
  for (double& x : g) x = std::exp(x);
  return g;
}

// Matches each reference time to the nearest found extremum and checks the
// offset against the position tolerance.
inline void position_checks(std::vector<CheckLine>& out,
                            const std::vector<Extremum>& found,
                            const std::vector<double>& reference,
                            const char* kind, double tol) {
  for (double ref : reference) {
    double best = std::numeric_limits<double>::quiet_NaN();
    double dist = std::numeric_limits<double>::infinity();
    for (const auto& e : found) {
      const double d = std::abs(e.time - ref);
      if (d < dist) {
        dist = d;
        best = e.time;
      }
    }
    std::ostringstream label, req;
    label << kind << " near t=" << ref;
    req << "position within +/- " << tol << " of " << ref;
    out.push_back({label.str(), req.str(), best, dist <= tol, false});
  }
}

inline GateRunResult run_with(const GateSpec& g, const InputQubit& q,
                              MeasurementSchedule s, const BathParams& p,
                              CompositionConvention conv,
                              MeasuredQubitHandling handling) {
  s.convention = conv;
  s.handling = handling;
  return run_gate(g, q, s, p);
}

inline PureState random_state_on_support(const std::vector<Eigen::Index>& idx,
                                         int n, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v = Vector::Zero(Eigen::Index(1) << n);
  for (Eigen::Index i : idx) {
    v[i] = complexd(gauss(rng), gauss(rng));
  }
  PureState psi(n, std::move(v));
  psi.normalize();
  return psi;
}

// All basis indices of an n-qubit register whose |m_sum| equals target.
inline std::vector<Eigen::Index> abs_m_class(int n, int target) {
  std::vector<Eigen::Index> idx;
  const Eigen::Index dim = Eigen::Index(1) << n;
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (std::abs(m_sum(static_cast<std::uint64_t>(r), n)) == target) {
      idx.push_back(r);
    }
  }
  return idx;
}

}  // namespace detail

// Runs the complete reference table with the calibrated bath parameters.
inline ReproduceReport run_reference_checks() {
  using detail::above_line;
  using detail::approx_line;
  using detail::at_most_line;
  using detail::below_line;
  using detail::info_line;

  ReproduceReport report;
  const BathParams bath;  // calibrated defaults: eta 1e-3, omega_c 100, bh 1
  const InputQubit alpha_one{1.0, 0.0};
  const PureState cluster_state = post_first_measurement(alpha_one);

  const std::array<std::array<double, 3>, 6> schedules{{{6, 8, 10},
                                                        {14, 16, 18},
                                                        {15.2, 15.7, 16.2},
                                                        {15.5, 15.7, 15.9},
                                                        {7.8, 23.4, 39},
                                                        {15.7, 31.4, 47.1}}};
  const std::array<const char*, 6> schedule_names{
      "(6,8,10)",          "(14,16,18)",     "(15.2,15.7,16.2)",
      "(15.5,15.7,15.9)", "(7.8,23.4,39)",  "(15.7,31.4,47.1)"};

  // --- Criterion 1: state-fidelity extrema -------------------------------
  {
    CriterionOutcome c;
    c.id = 1;
    c.title = "state-fidelity extrema (four-qubit register, alpha=1)";
    c.lines.push_back(approx_line(
        "F(15.7)", fidelity_at(cluster_state, 15.7, bath), 0.71, 0.02));
    c.lines.push_back(approx_line(
        "F(31.4)", fidelity_at(cluster_state, 31.4, bath), 0.60, 0.02));
    c.lines.push_back(
        at_most_line("F(7.8)", fidelity_at(cluster_state, 7.8, bath), 0.01));
    c.lines.push_back(approx_line(
        "F(23.5)", fidelity_at(cluster_state, 23.5, bath), 0.015, 0.01));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 2: engine vs closed forms -------------------------------
  {
    CriterionOutcome c;
    c.id = 2;
    c.title = "engine fidelity agrees with the closed forms";

    // The oscillating two-qubit reference state |1> (x) (|0>+|1>)/sqrt2.
    PureState phi(2, Vector::Zero(4));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    phi.amplitudes[2] = inv_sqrt2;
    phi.amplitudes[3] = inv_sqrt2;

    const std::vector<double> grid = detail::linspace(0.0, 50.0, 1000);
    double worst_two = 0.0;
    for (double t : grid) {
      worst_two = std::max(worst_two, std::abs(fidelity_at(phi, t, bath) -
                                               closed_form_two_qubit(t, bath)));
    }
    c.lines.push_back(at_most_line(
        "max |engine - two-qubit closed form| on 1000-point grid", worst_two,
        1e-10));

    double worst_cluster = 0.0;
    std::mt19937 rng(20260814u);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 21; ++trial) {
      InputQubit q = alpha_one;
      if (trial > 0) {
        const double a = angle(rng);
        q = InputQubit{std::cos(a), std::sin(a)};
      }
      const PureState psi0 = post_first_measurement(q);
      for (double t : grid) {
        worst_cluster =
            std::max(worst_cluster, std::abs(fidelity_at(psi0, t, bath) -
                                             closed_form_cluster(q, t, bath)));
      }
    }
    c.lines.push_back(at_most_line(
        "max |engine - cluster closed form|, alpha=1 plus 20 random (a,b)",
        worst_cluster, 1e-10));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 3: closed forms vs quadrature ----------------------------
  {
    CriterionOutcome c;
    c.id = 3;
    c.title = "Gamma/Theta closed forms vs direct quadrature";
    double worst_rel = 0.0;
    const std::vector<double> tgrid = detail::logspace(1e-4, 1e2, 25);
    for (double eta : {1e-3, 0.1}) {
      for (double omega_c : {10.0, 100.0}) {
        for (double beta_hbar :
             {1.0, std::numeric_limits<double>::infinity()}) {
          const BathParams p{eta, omega_c, beta_hbar};
          for (double t : tgrid) {
            const double gc = gamma_closed(t, p);
            const double gq = gamma_quad(t, p);
            const double tc = theta_closed(t, p);
            const double tq = theta_quad(t, p);
            worst_rel = std::max(
                worst_rel, std::abs(gc - gq) / std::max(std::abs(gc), 1e-300));
            worst_rel = std::max(
                worst_rel, std::abs(tc - tq) / std::max(std::abs(tc), 1e-300));
          }
        }
      }
    }
    c.lines.push_back(at_most_line(
        "worst relative error over the 2x2x2x25 parameter grid", worst_rel,
        1e-6));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 4: NOT gate, distinct times, convention discrimination ---
  const std::array<double, 6> not_expected{0.354, 0.53, 0.84,
                                           0.90,  0.50, 0.756};
  CompositionConvention chosen_conv = CompositionConvention::fresh_bath;
  MeasuredQubitHandling chosen_handling = MeasuredQubitHandling::retain;
  bool any_convention_passed = false;
  {
    CriterionOutcome c;
    c.id = 4;
    c.title = "NOT gate fidelity at the six published schedules";
    const GateSpec not_gate = gate_catalog("not");

    int best_hits = -1;
    double best_dev = std::numeric_limits<double>::infinity();
    std::string best_name;
    for (CompositionConvention conv :
         {CompositionConvention::divisible, CompositionConvention::fresh_bath}) {
      for (MeasuredQubitHandling handling :
           {MeasuredQubitHandling::remove, MeasuredQubitHandling::retain}) {
        int hits = 0;
        double max_dev = 0.0;
        const std::string combo =
            std::string(to_string(conv)) + "/" + to_string(handling);
        for (std::size_t i = 0; i < schedules.size(); ++i) {
          const auto r = detail::run_with(
              not_gate, not_gate.reference_input,
              MeasurementSchedule::at_times(schedules[i][0], schedules[i][1],
                                            schedules[i][2]),
              bath, conv, handling);
          CheckLine line =
              approx_line("NOT " + std::string(schedule_names[i]) + " " + combo,
                          r.gate_fidelity, not_expected[i], 0.03);
          max_dev = std::max(max_dev,
                             std::abs(r.gate_fidelity - not_expected[i]));
          if (line.passed) ++hits;
          c.lines.push_back(std::move(line));
        }
        if (hits == 6) any_convention_passed = true;
        if (hits > best_hits || (hits == best_hits && max_dev < best_dev)) {
          best_hits = hits;
          best_dev = max_dev;
          best_name = combo;
          chosen_conv = conv;
          chosen_handling = handling;
        }
      }
    }
    c.passed = any_convention_passed;
    if (any_convention_passed) {
      report.convention_record = "criterion 4 satisfied by " + best_name;
    } else {
      report.convention_record =
          "no bookkeeping variant met all six values; closest: " + best_name +
          " (" + std::to_string(best_hits) + " of 6 within tolerance)";
      c.notes.push_back(
          "The published 50% value at (7.8,23.4,39) equals the"
          " complete-dephasing limit of this branch; the calibrated bath is"
          " far from that limit at these times, giving ~0.72 under every"
          " bookkeeping variant.");
    }
    c.notes.push_back("convention record: " + report.convention_record);
    report.criteria.push_back(std::move(c));
  }
  report.downgrade_applied = !any_convention_passed;

  // --- Criteria 5 and 6: HADAMARD and PHASE under the selected convention -
  {
    CriterionOutcome c;
    c.id = 5;
    c.title = "HADAMARD gate fidelity at the published schedules";
    const GateSpec h_gate = gate_catalog("hadamard");
    std::array<double, 6> actual{};
    for (std::size_t i = 0; i < schedules.size(); ++i) {
      actual[i] = detail::run_with(
                      h_gate, h_gate.reference_input,
                      MeasurementSchedule::at_times(
                          schedules[i][0], schedules[i][1], schedules[i][2]),
                      bath, chosen_conv, chosen_handling)
                      .gate_fidelity;
    }
    c.lines.push_back(approx_line("H (6,8,10)", actual[0], 0.39, 0.03));
    c.lines.push_back(approx_line("H (14,16,18)", actual[1], 0.52, 0.03));
    c.lines.push_back(info_line("H (15.2,15.7,16.2)", actual[2],
                                "(no published value)"));
    c.lines.push_back(
        approx_line("H (15.5,15.7,15.9)", actual[3], 0.85, 0.03));
    c.lines.push_back(approx_line("H (7.8,23.4,39)", actual[4], 0.50, 0.03));
    c.lines.push_back(
        approx_line("H (15.7,31.4,47.1)", actual[5], 0.71, 0.03));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }
  {
    CriterionOutcome c;
    c.id = 6;
    c.title = "PHASE gate fidelity at the published schedules";
    const GateSpec p_gate = gate_catalog("phase");
    std::array<double, 6> actual{};
    for (std::size_t i = 0; i < schedules.size(); ++i) {
      actual[i] = detail::run_with(
                      p_gate, p_gate.reference_input,
                      MeasurementSchedule::at_times(
                          schedules[i][0], schedules[i][1], schedules[i][2]),
                      bath, chosen_conv, chosen_handling)
                      .gate_fidelity;
    }
    c.lines.push_back(approx_line("PHASE (6,8,10)", actual[0], 0.48, 0.03));
    c.lines.push_back(approx_line("PHASE (14,16,18)", actual[1], 0.65, 0.03));
    c.lines.push_back(info_line("PHASE (15.2,15.7,16.2)", actual[2],
                                "(no published value)"));
    c.lines.push_back(
        approx_line("PHASE (15.5,15.7,15.9)", actual[3], 0.95, 0.03));
    c.lines.push_back(
        approx_line("PHASE (7.8,23.4,39)", actual[4], 0.46, 0.03));
    c.lines.push_back(
        approx_line("PHASE (15.7,31.4,47.1)", actual[5], 0.85, 0.03));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 7: simultaneous scenario ---------------------------------
  {
    CriterionOutcome c;
    c.id = 7;
    c.title = "simultaneous-measurement fidelities";
    auto sim = [&](const char* gate, double t) {
      const GateSpec g = gate_catalog(gate);
      return detail::run_with(g, g.reference_input,
                              MeasurementSchedule::simultaneous(t), bath,
                              chosen_conv, chosen_handling)
          .gate_fidelity;
    };
    c.lines.push_back(approx_line("NOT t=0.8", sim("not", 0.8), 0.93, 0.03));
    c.lines.push_back(approx_line("NOT t=15.7", sim("not", 15.7), 0.93, 0.03));
    c.lines.push_back(above_line("NOT t=31.4", sim("not", 31.4), 0.80));
    c.lines.push_back(above_line("NOT t=47.1", sim("not", 47.1), 0.80));
    c.lines.push_back(approx_line("NOT t=5.8", sim("not", 5.8), 0.70, 0.03));
    c.lines.push_back(above_line("H t=15.7", sim("hadamard", 15.7), 0.80));
    c.lines.push_back(above_line("H t=31.4", sim("hadamard", 31.4), 0.80));
    c.lines.push_back(above_line("H t=47.1", sim("hadamard", 47.1), 0.80));
    c.lines.push_back(below_line("H t=7.8", sim("hadamard", 7.8), 0.40));
    c.lines.push_back(below_line("H t=23.5", sim("hadamard", 23.5), 0.40));
    c.lines.push_back(below_line("H t=39.2", sim("hadamard", 39.2), 0.40));
    c.lines.push_back(
        approx_line("PHASE t=15.9", sim("phase", 15.9), 0.96, 0.03));
    c.lines.push_back(
        approx_line("PHASE t=31.6", sim("phase", 31.6), 0.95, 0.03));
    c.lines.push_back(
        approx_line("PHASE t=47.3", sim("phase", 47.3), 0.93, 0.03));
    c.lines.push_back(
        approx_line("PHASE t=8.4", sim("phase", 8.4), 0.22, 0.03));
    c.lines.push_back(
        approx_line("PHASE t=24.8", sim("phase", 24.8), 0.34, 0.03));
    c.lines.push_back(
        approx_line("PHASE t=40.4", sim("phase", 40.4), 0.44, 0.03));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Downgrade fallback for criteria 4-7: extremum positions ------------
  if (report.downgrade_applied) {
    const double pos_tol = 0.3;

    // The six distinct-times schedules are built from the peak/valley times
    // of the state-fidelity curve, so criteria 4-6 share one position table.
    auto state_eval = [&](double t) {
      return fidelity_at(cluster_state, t, bath);
    };
    FidelityCurve state_curve;
    for (double t = 0.5; t <= 50.0 + 1e-9; t += 0.05) {
      state_curve.times.push_back(t);
      state_curve.values.push_back(state_eval(t));
    }
    const ExtremaReport state_ext = find_extrema(state_curve, state_eval, 1e-6);

    std::vector<CheckLine> state_checks;
    detail::position_checks(state_checks, state_ext.peaks, {15.7, 31.4, 47.1},
                            "state-curve peak", pos_tol);
    detail::position_checks(state_checks, state_ext.valleys, {7.8, 23.5, 39.2},
                            "state-curve valley", pos_tol);

    for (int id : {4, 5, 6}) {
      CriterionOutcome& c = report.criteria[static_cast<std::size_t>(id - 1)];
      if (c.passed) {
        c.notes.push_back(
            "block downgrade triggered by criterion 4, but every published"
            " value of this criterion is met as stated.");
        continue;
      }
      c.downgraded = true;
      c.fallback_lines = state_checks;
      c.fallback_passed = detail::all_lines_pass(c.fallback_lines);
      c.notes.push_back(
          "downgraded: positions of the curve extrema the schedules were"
          " built from are checked within +/- 0.3; the quoted fidelities are"
          " reported above with their discrepancies.");
    }

    // Criterion 7 checks each gate's own simultaneous curve where the
    // published text quotes extremum times.
    CriterionOutcome& c7 = report.criteria[6];
    if (!c7.passed) {
      c7.downgraded = true;
      auto gate_curve_ext = [&](const char* gate) {
        const GateSpec g = gate_catalog(gate);
        auto eval = [&](double t) {
          return detail::run_with(g, g.reference_input,
                                  MeasurementSchedule::simultaneous(t), bath,
                                  chosen_conv, chosen_handling)
              .gate_fidelity;
        };
        FidelityCurve curve;
        for (double t = 2.0; t <= 50.0 + 1e-9; t += 0.05) {
          curve.times.push_back(t);
          curve.values.push_back(eval(t));
        }
        return find_extrema(curve, eval, 1e-6);
      };

      const ExtremaReport not_ext = gate_curve_ext("not");
      detail::position_checks(c7.fallback_lines, not_ext.peaks,
                              {15.7, 31.4, 47.1}, "NOT curve peak", pos_tol);
      detail::position_checks(c7.fallback_lines, not_ext.valleys, {5.8},
                              "NOT curve valley", pos_tol);

      const ExtremaReport phase_ext = gate_curve_ext("phase");
      detail::position_checks(c7.fallback_lines, phase_ext.peaks,
                              {15.9, 31.6, 47.3}, "PHASE curve peak", pos_tol);
      detail::position_checks(c7.fallback_lines, phase_ext.valleys,
                              {8.4, 24.8, 40.4}, "PHASE curve valley", pos_tol);

      const ExtremaReport h_ext = gate_curve_ext("hadamard");
      if (!h_ext.peaks.empty()) {
        c7.fallback_lines.push_back(detail::info_line(
            "H curve first peak (no published extremum times)",
            h_ext.peaks.front().time, "(informational)"));
      }
      c7.fallback_passed = detail::all_lines_pass(c7.fallback_lines);
      c7.notes.push_back(
          "downgraded: the published HADAMARD numbers are threshold"
          " statements at the state-curve times, not extremum positions, so"
          " only NOT and PHASE carry position checks; H extrema are reported"
          " for information.");
    }
  }

  // --- Criterion 8: zero-time identities ----------------------------------
  {
    CriterionOutcome c;
    c.id = 8;
    c.title = "zero-time identities for every catalog gate";
    for (const char* name : {"not", "hadamard", "phase"}) {
      const GateSpec g = gate_catalog(name);
      for (auto mode : {MeasurementSchedule::Mode::simultaneous,
                        MeasurementSchedule::Mode::distinct_times}) {
        MeasurementSchedule s =
            mode == MeasurementSchedule::Mode::simultaneous
                ? MeasurementSchedule::simultaneous(0.0)
                : MeasurementSchedule::at_times(0.0, 0.0, 0.0);
        const auto r = detail::run_with(g, g.reference_input, s, bath,
                                        chosen_conv, chosen_handling);
        const char* mode_name =
            mode == MeasurementSchedule::Mode::simultaneous ? "simultaneous"
                                                            : "distinct";
        c.lines.push_back(approx_line(std::string(name) + " fidelity at t=0 (" +
                                          mode_name + ")",
                                      r.gate_fidelity, 1.0, 1e-12));
        c.lines.push_back(approx_line(std::string(name) +
                                          " branch probability at t=0 (" +
                                          mode_name + ")",
                                      r.branch_probability, 1.0 / 16.0, 1e-12));
      }
    }
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 9: property suite ----------------------------------------
  {
    CriterionOutcome c;
    c.id = 9;
    c.title = "channel property suite";
    std::mt19937 rng(97531u);
    std::uniform_real_distribution<double> tdist(0.0, 30.0);

    double worst_trace = 0.0;
    double worst_herm = 0.0;
    double worst_eig = 0.0;
    double worst_comp = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + trial % 3;
      const Eigen::Index dim = Eigen::Index(1) << n;
      std::vector<Eigen::Index> all(static_cast<std::size_t>(dim));
      for (Eigen::Index i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
      const PureState psi = detail::random_state_on_support(all, n, rng);
      DensityMatrix rho = outer(psi);

      double t1 = tdist(rng);
      double t2 = tdist(rng);
      if (t2 < t1) std::swap(t1, t2);
      const DensityMatrix out = propagate(rho, 0.0, t2, bath);
      worst_trace = std::max(worst_trace, std::abs(out.trace_real() - 1.0));
      worst_herm = std::max(worst_herm, out.hermiticity_defect());
      worst_eig = std::min(worst_eig, out.min_eigenvalue());

      const DensityMatrix two_step =
          propagate(propagate(rho, 0.0, t1, bath), t1, t2, bath);
      worst_comp = std::max(
          worst_comp,
          (two_step.elements - out.elements).cwiseAbs().maxCoeff());
    }
    c.lines.push_back(
        at_most_line("worst |trace - 1| after propagation", worst_trace, 1e-12));
    c.lines.push_back(
        at_most_line("worst Hermiticity defect", worst_herm, 1e-12));
    c.lines.push_back(CheckLine{"worst minimum eigenvalue", ">= -1e-10",
                                worst_eig, worst_eig >= -1e-10, false});
    c.lines.push_back(at_most_line(
        "worst divisible composition defect", worst_comp, 1e-12));

    // Monotone decay for states supported on a single |m| class, which is
    // exactly the family failing the oscillation condition.
    double worst_rise = -1.0;
    int condition_failures = 0;
    const std::vector<double> tgrid = detail::linspace(0.0, 40.0, 81);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 3;
      std::vector<int> classes;
      for (int v = n % 2; v <= n; v += 2) {
        if (detail::abs_m_class(n, v).size() >= 2) classes.push_back(v);
      }
      const int target =
          classes[static_cast<std::size_t>(rng()) % classes.size()];
      const PureState psi = detail::random_state_on_support(
          detail::abs_m_class(n, target), n, rng);
      if (oscillation_condition(psi).may_oscillate) {
        ++condition_failures;
        continue;
      }
      double prev = std::numeric_limits<double>::infinity();
      for (double t : tgrid) {
        const double f = fidelity_at(psi, t, bath);
        worst_rise = std::max(worst_rise, f - prev);
        prev = f;
      }
    }
    c.lines.push_back(at_most_line(
        "worst fidelity increase over 200 single-|m|-class states",
        worst_rise, 1e-12));
    c.lines.push_back(CheckLine{
        "states misclassified as oscillation-capable", "= 0",
        static_cast<double>(condition_failures), condition_failures == 0,
        false});
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  // --- Criterion 10: scheduler recovers the published optima --------------
  {
    CriterionOutcome c;
    c.id = 10;
    c.title = "schedule optimizer recovers the published optima on [1, 20]";
    const GateSpec phase_gate = gate_catalog("phase");
    const OptimizeResult phase_opt = optimize_schedule(
        phase_gate, phase_gate.reference_input,
        MeasurementSchedule::Mode::simultaneous, 1.0, 20.0, bath, chosen_conv,
        chosen_handling);
    c.lines.push_back(approx_line("PHASE optimal t_gap",
                                  phase_opt.best_schedule.t_gap, 15.9, 0.1));
    c.lines.push_back(
        approx_line("PHASE optimal fidelity", phase_opt.best_fidelity, 0.96,
                    0.03));

    const GateSpec not_gate = gate_catalog("not");
    const OptimizeResult not_opt = optimize_schedule(
        not_gate, not_gate.reference_input,
        MeasurementSchedule::Mode::simultaneous, 1.0, 20.0, bath, chosen_conv,
        chosen_handling);
    c.lines.push_back(approx_line("NOT optimal t_gap",
                                  not_opt.best_schedule.t_gap, 15.7, 0.1));
    c.lines.push_back(approx_line("NOT optimal fidelity",
                                  not_opt.best_fidelity, 0.93, 0.03));
    c.passed = detail::all_lines_pass(c.lines);
    report.criteria.push_back(std::move(c));
  }

  return report;
}

inline void print_report(const ReproduceReport& report, std::ostream& os) {
  os << "reference reproduction report\n";
  os << "=============================\n";
  for (const auto& c : report.criteria) {
    const char* verdict = c.passed             ? "[PASS]           "
                          : c.effective_pass() ? "[PASS-DOWNGRADED]"
                                               : "[FAIL]           ";
    os << verdict << " criterion " << c.id << ": " << c.title << "\n";
    for (const auto& l : c.lines) {
      os << "    " << (l.informational ? "info" : (l.passed ? "ok  " : "MISS"))
         << "  " << l.label << " = " << std::setprecision(10) << l.actual
         << "  " << l.requirement << "\n";
    }
    if (c.downgraded) {
      os << "    -- position fallback ("
         << (c.fallback_passed ? "satisfied" : "NOT satisfied") << ") --\n";
      for (const auto& l : c.fallback_lines) {
        os << "    "
           << (l.informational ? "info" : (l.passed ? "ok  " : "MISS")) << "  "
           << l.label << " = " << std::setprecision(10) << l.actual << "  "
           << l.requirement << "\n";
      }
    }
    for (const auto& note : c.notes) {
      os << "    note: " << note << "\n";
    }
  }
  os << "=============================\n";
  if (report.downgrade_applied) {
    os << "DOWNGRADE APPLIED: no composition/bookkeeping variant reproduced"
          " every published distinct-times value; criteria in the 4-7 block"
          " that missed a value were checked against extremum positions"
          " (+/- 0.3) instead, and the value discrepancies are listed"
          " above.\n";
    os << "convention record: " << report.convention_record << "\n";
  } else {
    os << "convention record: " << report.convention_record << "\n";
  }
  os << (report.all_passed() ? "RESULT: PASS" : "RESULT: FAIL");
  if (report.downgrade_applied && report.all_passed()) {
    os << " (with downgraded criteria 4-7)";
  }
  os << "\n";
}

}  // namespace dephasim
