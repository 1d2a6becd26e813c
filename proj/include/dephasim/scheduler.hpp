// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Extremum detection on fidelity curves and measurement-schedule
// optimization. The optimizer looks for the best resonant waiting time: the
// highest interior local maximum of the fidelity over the window. Boundary
// values are reported only when the curve is monotone across the whole
// window, because a boundary maximum reflects the window choice rather than
// a revival of the state.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dephasim/fidelity.hpp"
#include "dephasim/mbqc.hpp"

namespace dephasim {

struct Extremum {
  double time = 0.0;
  double value = 0.0;
};

struct ExtremaReport {
  std::vector<Extremum> peaks;
  std::vector<Extremum> valleys;
};

namespace detail {

// Golden-section search for the maximum of f on [a, b], to a bracket width
// of tol. Assumes a single interior maximum in the bracket.
inline Extremum golden_max(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

inline Extremum golden_min(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  Extremum e = golden_max([&f](double x) { return -f(x); }, a, b, tol);
  e.value = -e.value;
  return e;
}

}  // namespace detail

// Locates the interior local extrema of a sampled curve and refines each one
// with golden-section search against the underlying evaluator. The curve
// grid fixes the brackets; the evaluator supplies exact values inside them.
inline ExtremaReport find_extrema(const FidelityCurve& curve,
                                  const std::function<double(double)>& eval,
                                  double refine_tol = 1e-6) {
  const std::size_t n = curve.times.size();
  if (curve.values.size() != n) {
    throw std::invalid_argument("find_extrema: curve arrays differ in size");
  }
  ExtremaReport report;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double prev = curve.values[i - 1];
    const double here = curve.values[i];
    const double next = curve.values[i + 1];
    const double a = curve.times[i - 1];
    const double b = curve.times[i + 1];
    if ((here > prev && here >= next) || (here >= prev && here > next)) {
      report.peaks.push_back(detail::golden_max(eval, a, b, refine_tol));
    } else if ((here < prev && here <= next) || (here <= prev && here < next)) {
      report.valleys.push_back(detail::golden_min(eval, a, b, refine_tol));
    }
  }
  return report;
}

struct OptimizeResult {
  MeasurementSchedule best_schedule;
  double best_fidelity = 0.0;
  std::int64_t evaluations = 0;
};

namespace detail {

struct CountedGateEval {
  const GateSpec& gate;
  const InputQubit& input;
  const BathParams& bath;
  CompositionConvention convention;
  MeasuredQubitHandling handling;
  std::int64_t count = 0;

  double simultaneous(double t) {
    ++count;
    MeasurementSchedule s = MeasurementSchedule::simultaneous(t);
    s.convention = convention;
    s.handling = handling;
    return run_gate(gate, input, s, bath).gate_fidelity;
  }

  double triple(double t1, double t2, double t3) {
    ++count;
    MeasurementSchedule s = MeasurementSchedule::at_times(t1, t2, t3);
    s.convention = convention;
    s.handling = handling;
    return run_gate(gate, input, s, bath).gate_fidelity;
  }
};

}  // namespace detail

// Optimizes the measurement schedule of a gate over the window [lo, hi].
//
// simultaneous mode scans a coarse grid, picks the best interior local
// maximum, and refines it by golden-section search. If the sampled curve is
// monotone (no interior peak), the better window endpoint is returned.
//
// distinct_times mode scans all ordered triples lo <= t1 <= t2 <= t3 <= hi
// on a coarse grid and then refines the times cyclically, one coordinate at
// a time, keeping the ordering. Ties prefer the earliest triple.
inline OptimizeResult optimize_schedule(
    const GateSpec& g, const InputQubit& q, MeasurementSchedule::Mode mode,
    double lo, double hi, const BathParams& p,
    CompositionConvention conv = CompositionConvention::divisible,
    MeasuredQubitHandling handling = MeasuredQubitHandling::remove,
    double refine_tol = 1e-4) {
  if (!(lo >= 0.0) || !(hi >= lo)) {
    throw std::invalid_argument("optimize_schedule: need 0 <= lo <= hi");
  }
  detail::CountedGateEval eval{g, q, p, conv, handling};

  OptimizeResult result;
  if (mode == MeasurementSchedule::Mode::simultaneous) {
    MeasurementSchedule best = MeasurementSchedule::simultaneous(lo);
    best.convention = conv;
    best.handling = handling;

    if (hi == lo) {
      result.best_fidelity = eval.simultaneous(lo);
      result.best_schedule = best;
      result.evaluations = eval.count;
      return result;
    }

    const double step = 0.05;
    const int cells = std::max(2, static_cast<int>(std::ceil((hi - lo) / step)));
    std::vector<double> ts(static_cast<std::size_t>(cells) + 1);
    std::vector<double> fs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      ts[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(cells);
      fs[i] = eval.simultaneous(ts[i]);
    }

    auto f = [&eval](double t) { return eval.simultaneous(t); };
    Extremum champion{ts[0], fs[0]};
    bool found_peak = false;
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
      if ((fs[i] > fs[i - 1] && fs[i] >= fs[i + 1]) ||
          (fs[i] >= fs[i - 1] && fs[i] > fs[i + 1])) {
        Extremum e = detail::golden_max(f, ts[i - 1], ts[i + 1], refine_tol);
        if (!found_peak || e.value > champion.value) {
          champion = e;
          found_peak = true;
        }
      }
    }
    if (!found_peak) {
      champion = fs.back() > fs.front() ? Extremum{ts.back(), fs.back()}
                                        : Extremum{ts.front(), fs.front()};
    }
    best.t_gap = champion.time;
    result.best_schedule = best;
    result.best_fidelity = champion.value;
    result.evaluations = eval.count;
    return result;
  }

  // distinct_times
  MeasurementSchedule best = MeasurementSchedule::at_times(lo, lo, lo);
  best.convention = conv;
  best.handling = handling;

  if (hi == lo) {
    result.best_fidelity = eval.triple(lo, lo, lo);
    result.best_schedule = best;
    result.evaluations = eval.count;
    return result;
  }

  const double step = std::max(0.05, (hi - lo) / 80.0);
  const int cells = std::max(1, static_cast<int>(std::round((hi - lo) / step)));
  std::vector<double> grid(static_cast<std::size_t>(cells) + 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
  }

  std::array<double, 3> champ{lo, lo, lo};
  double champ_fid = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      for (std::size_t k = j; k < grid.size(); ++k) {
        const double fid = eval.triple(grid[i], grid[j], grid[k]);
        if (fid > champ_fid) {
          champ_fid = fid;
          champ = {grid[i], grid[j], grid[k]};
        }
      }
    }
  }

  // Cyclic coordinate refinement inside the grid neighbourhood, clamped so
  // the ordering t1 <= t2 <= t3 is preserved.
  for (int cycle = 0; cycle < 6; ++cycle) {
    const double before = champ_fid;
    for (int c = 0; c < 3; ++c) {
      const double floor_t = c == 0 ? lo : champ[static_cast<std::size_t>(c - 1)];
      const double ceil_t = c == 2 ? hi : champ[static_cast<std::size_t>(c + 1)];
      const double a = std::max(floor_t, champ[static_cast<std::size_t>(c)] - step);
      const double b = std::min(ceil_t, champ[static_cast<std::size_t>(c)] + step);
      if (b <= a) continue;
      auto f = [&](double t) {
        std::array<double, 3> probe = champ;
        probe[static_cast<std::size_t>(c)] = t;
        return eval.triple(probe[0], probe[1], probe[2]);
      };
      const Extremum e = detail::golden_max(f, a, b, refine_tol);
      if (e.value > champ_fid) {
        champ_fid = e.value;
        champ[static_cast<std::size_t>(c)] = e.time;
      }
    }
    if (champ_fid - before < 1e-12) break;
  }

  best.times = champ;
  result.best_schedule = best;
  result.best_fidelity = champ_fid;
  result.evaluations = eval.count;
  return result;
}

}  // namespace dephasim
