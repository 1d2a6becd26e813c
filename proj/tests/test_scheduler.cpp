// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "dephasim/scheduler.hpp"

using namespace dephasim;

namespace {

const BathParams calibrated{};

FidelityCurve sample(const std::function<double(double)>& f, double lo,
                     double hi, int points) {
  FidelityCurve curve;
  for (int i = 0; i < points; ++i) {
    const double t = lo + (hi - lo) * i / (points - 1);
    curve.times.push_back(t);
    curve.values.push_back(f(t));
  }
  return curve;
}

}  // namespace

TEST_CASE("extrema of a pure cosine", "[scheduler]") {
  const auto f = [](double t) { return 0.5 + 0.5 * std::cos(0.4 * t); };
  const FidelityCurve curve = sample(f, 0.0, 50.0, 1001);
  const ExtremaReport report = find_extrema(curve, f, 1e-8);

  const double period = 2.0 * kPi / 0.4;  // 15.70796...
  REQUIRE(report.peaks.size() == 3);
  REQUIRE(report.valleys.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(std::abs(report.peaks[i].time - (i + 1) * period) < 1e-5);
    REQUIRE(std::abs(report.peaks[i].value - 1.0) < 1e-10);
    REQUIRE(std::abs(report.valleys[i].time - (i + 0.5) * period) < 1e-5);
    REQUIRE(std::abs(report.valleys[i].value) < 1e-10);
  }

  SECTION("peaks and valleys alternate") {
    for (std::size_t i = 0; i < 3; ++i) {
      REQUIRE(report.valleys[i].time < report.peaks[i].time);
      if (i + 1 < 3) REQUIRE(report.peaks[i].time < report.valleys[i + 1].time);
    }
  }
}

TEST_CASE("extrema of the cluster-state fidelity", "[scheduler]") {
  const InputQubit q{1.0, 0.0};
  const auto f = [&](double t) {
    return closed_form_cluster(q, t, calibrated);
  };
  const FidelityCurve curve = sample(f, 0.5, 50.0, 991);
  const ExtremaReport report = find_extrema(curve, f, 1e-7);

  REQUIRE(report.peaks.size() >= 3);
  REQUIRE(report.valleys.size() >= 3);

  // The curve carries a shallow ripple near t = 3 before the first deep
  // valley, so landmark extrema are identified by value, not by index.
  const Extremum* deepest = &report.valleys[0];
  for (const Extremum& v : report.valleys) {
    if (v.value < deepest->value) deepest = &v;
  }
  const Extremum* highest = &report.peaks[0];
  for (const Extremum& pk : report.peaks) {
    if (pk.value > highest->value) highest = &pk;
  }
  REQUIRE(std::abs(deepest->time - 7.8514) < 1e-2);
  REQUIRE(std::abs(highest->time - 15.6802) < 1e-2);
  REQUIRE(std::abs(deepest->value - 0.00108) < 1e-3);
  REQUIRE(std::abs(highest->value - 0.7105) < 1e-3);

  // The ripple itself: a local valley then a local peak below t = 5.
  REQUIRE(report.valleys[0].time < 5.0);
  REQUIRE(report.peaks[0].time < 5.0);
  REQUIRE(report.valleys[0].time < report.peaks[0].time);
}

TEST_CASE("monotone and flat curves yield no extrema", "[scheduler]") {
  SECTION("monotone decay") {
    const auto f = [&](double t) {
      return 0.5 + 0.5 * std::exp(-16.0 * gamma_closed(t, calibrated));
    };
    const FidelityCurve curve = sample(f, 0.0, 40.0, 801);
    const ExtremaReport report = find_extrema(curve, f);
    REQUIRE(report.peaks.empty());
    REQUIRE(report.valleys.empty());
  }

  SECTION("constant curve") {
    const auto f = [](double) { return 0.75; };
    const FidelityCurve curve = sample(f, 0.0, 10.0, 101);
    const ExtremaReport report = find_extrema(curve, f);
    REQUIRE(report.peaks.empty());
    REQUIRE(report.valleys.empty());
  }
}

TEST_CASE("simultaneous-schedule optimization", "[scheduler]") {
  SECTION("PHASE optimum in [1, 20]") {
    const GateSpec g = gate_catalog("phase");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, 1.0,
        20.0, calibrated);
    REQUIRE(std::abs(r.best_schedule.t_gap - 15.9) < 0.1);
    REQUIRE(std::abs(r.best_fidelity - 0.96) < 0.03);
    REQUIRE(std::abs(r.best_schedule.t_gap - 15.955025) < 1e-3);
    REQUIRE(std::abs(r.best_fidelity - 0.9656049769) < 1e-6);
    REQUIRE(r.evaluations >= 381);

    // The search prefers interior revival peaks; the decaying left edge of
    // the window scores slightly higher here but is not a revival, so the
    // guarantee is against interior grid points only.
    std::vector<double> grid;
    for (int i = 0; i <= 380; ++i) grid.push_back(1.0 + 0.05 * i);
    const FidelityCurve coarse = gate_fidelity_curve(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, grid,
        calibrated);
    double interior_max = 0.0;
    for (std::size_t i = 1; i + 1 < coarse.values.size(); ++i) {
      interior_max = std::max(interior_max, coarse.values[i]);
    }
    REQUIRE(r.best_fidelity >= interior_max - 1e-12);
  }

  SECTION("NOT optimum in [1, 20]") {
    const GateSpec g = gate_catalog("not");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, 1.0,
        20.0, calibrated);
    REQUIRE(std::abs(r.best_schedule.t_gap - 15.7) < 0.1);
    REQUIRE(std::abs(r.best_fidelity - 0.93) < 0.03);
    REQUIRE(std::abs(r.best_fidelity - 0.9303579082) < 1e-6);
  }

  SECTION("NOT in [3, 10] matches the curve maximum") {
    const GateSpec g = gate_catalog("not");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, 3.0,
        10.0, calibrated);
    std::vector<double> grid;
    for (int i = 0; i <= 700; ++i) grid.push_back(3.0 + 0.01 * i);
    const FidelityCurve dense = gate_fidelity_curve(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, grid,
        calibrated);
    double dense_max = 0.0;
    for (double v : dense.values) dense_max = std::max(dense_max, v);
    REQUIRE(r.best_fidelity >= dense_max - 1e-6);
    REQUIRE(std::abs(r.best_fidelity - dense_max) < 1e-3);
  }

  SECTION("degenerate window") {
    const GateSpec g = gate_catalog("hadamard");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::simultaneous, 0.0,
        0.0, calibrated);
    REQUIRE(r.best_schedule.t_gap == 0.0);
    REQUIRE(std::abs(r.best_fidelity - 1.0) < 1e-12);
    REQUIRE(r.evaluations == 1);
  }
}

TEST_CASE("distinct-times optimization", "[scheduler]") {
  SECTION("NOT in [14, 18] recovers the published neighbourhood") {
    const GateSpec g = gate_catalog("not");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::distinct_times, 14.0,
        18.0, calibrated);
    REQUIRE(r.best_schedule.mode == MeasurementSchedule::Mode::distinct_times);
    for (double t : r.best_schedule.times) {
      REQUIRE(std::abs(t - 15.7) < 0.7);
    }
    REQUIRE(r.best_fidelity >= 0.90);
    // The ordered grid contains the equal triple at the simultaneous peak.
    REQUIRE(r.best_fidelity >= 0.930357906646 - 1e-9);
    REQUIRE(r.best_schedule.times[0] <= r.best_schedule.times[1]);
    REQUIRE(r.best_schedule.times[1] <= r.best_schedule.times[2]);
  }

  SECTION("degenerate window") {
    const GateSpec g = gate_catalog("not");
    const OptimizeResult r = optimize_schedule(
        g, g.reference_input, MeasurementSchedule::Mode::distinct_times, 0.0,
        0.0, calibrated);
    REQUIRE(r.best_schedule.times == std::array<double, 3>{0.0, 0.0, 0.0});
    REQUIRE(std::abs(r.best_fidelity - 1.0) < 1e-12);
  }
}

TEST_CASE("optimizer input validation", "[scheduler]") {
  const GateSpec g = gate_catalog("not");
  REQUIRE_THROWS_AS(
      optimize_schedule(g, g.reference_input,
                        MeasurementSchedule::Mode::simultaneous, -1.0, 5.0,
                        calibrated),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      optimize_schedule(g, g.reference_input,
                        MeasurementSchedule::Mode::simultaneous, 5.0, 1.0,
                        calibrated),
      std::invalid_argument);
}
