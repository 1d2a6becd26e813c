// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Serialization: state files, CSV tables, and the JSON reports emitted by
// the command-line tool. All numeric output is deterministic; data files
// carry no timestamps, so identical configurations produce identical bytes.

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "dephasim/bath.hpp"
#include "dephasim/channel.hpp"
#include "dephasim/fidelity.hpp"
#include "dephasim/mbqc.hpp"
#include "dephasim/scheduler.hpp"
#include "dephasim/states.hpp"
#include "dephasim/tensor.hpp"

namespace dephasim {

// Shortest representation that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  if (res.ec != std::errc()) {
    throw std::runtime_error("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

// Fixed 17 significant digits; enough to round-trip any double.
inline std::string format_double_sig17(double x) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  if (res.ec != std::errc()) {
    throw std::runtime_error("format_double_sig17: conversion failed");
  }
  return std::string(buf, res.ptr);
}

inline nlohmann::json complex_to_json(const complexd& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

inline complexd complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument("expected a [re, im] pair");
  }
  return complexd(j[0].get<double>(), j[1].get<double>());
}

// State files: {"n_qubits": n, "amplitudes": [[re, im], ...]} with 2^n
// amplitude pairs, qubit 1 the most significant index bit.
inline nlohmann::json state_to_json(const PureState& psi) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    amps.push_back(complex_to_json(psi.amplitudes[i]));
  }
  return nlohmann::json{{"n_qubits", psi.n_qubits}, {"amplitudes", amps}};
}

inline PureState state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("amplitudes")) {
    throw std::invalid_argument(
        "state file must contain n_qubits and amplitudes");
  }
  if (!j["n_qubits"].is_number_integer()) {
    throw std::invalid_argument("n_qubits must be an integer");
  }
  const int n = j["n_qubits"].get<int>();
  if (n < 1 || n > 24) {
    throw std::invalid_argument("n_qubits out of range [1, 24]");
  }
  const auto& amps = j["amplitudes"];
  const Eigen::Index dim = Eigen::Index(1) << n;
  if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim) {
    throw std::invalid_argument("amplitudes must hold 2^n_qubits pairs");
  }
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = complex_from_json(amps[static_cast<std::size_t>(i)]);
  }
  PureState psi(n, std::move(v));
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector is not normalized");
  }
  return psi;
}

inline PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open state file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return state_from_json(j);
}

inline nlohmann::json schedule_to_json(const MeasurementSchedule& s) {
  if (s.mode == MeasurementSchedule::Mode::simultaneous) {
    return nlohmann::json{{"mode", "simultaneous"}, {"t_gap", s.t_gap}};
  }
  return nlohmann::json{
      {"mode", "distinct-times"},
      {"times", nlohmann::json::array({s.times[0], s.times[1], s.times[2]})}};
}

inline nlohmann::json convention_to_json(CompositionConvention conv,
                                         MeasuredQubitHandling handling) {
  return nlohmann::json{{"composition", to_string(conv)},
                        {"measured_qubits", to_string(handling)}};
}

inline nlohmann::json gate_result_to_json(const GateRunResult& r) {
  nlohmann::json state = nlohmann::json::array();
  for (Eigen::Index row = 0; row < 2; ++row) {
    nlohmann::json cells = nlohmann::json::array();
    for (Eigen::Index col = 0; col < 2; ++col) {
      cells.push_back(complex_to_json(r.output_state.elements(row, col)));
    }
    state.push_back(cells);
  }
  return nlohmann::json{
      {"gate", r.gate},
      {"alpha", complex_to_json(r.input.alpha)},
      {"beta", complex_to_json(r.input.beta)},
      {"schedule", schedule_to_json(r.schedule)},
      {"convention",
       convention_to_json(r.schedule.convention, r.schedule.handling)},
      {"branch_probability", r.branch_probability},
      {"gate_fidelity", r.gate_fidelity},
      {"output_state", state}};
}

inline nlohmann::json optimize_result_to_json(const OptimizeResult& r,
                                              double lo, double hi) {
  const char* mode =
      r.best_schedule.mode == MeasurementSchedule::Mode::simultaneous
          ? "simultaneous"
          : "distinct-times";
  return nlohmann::json{{"mode", mode},
                        {"window", nlohmann::json::array({lo, hi})},
                        {"best_schedule", schedule_to_json(r.best_schedule)},
                        {"best_fidelity", r.best_fidelity},
                        {"evaluations", r.evaluations}};
}

inline nlohmann::json oscillation_to_json(const OscillationVerdict& v) {
  return nlohmann::json{{"abs_m_values", v.abs_m_values},
                        {"may_oscillate", v.may_oscillate}};
}

// CSV builders. Headers are fixed; rows use shortest round-trip doubles
// except the standalone curve export, which uses 17 significant digits.

inline std::string decoherence_csv(const std::vector<double>& times,
                                   const BathParams& p) {
  std::string out = "t,gamma,theta,regime\n";
  for (double t : times) {
    const DephasingFactors f = dephasing_factors(t, p);
    out += format_double(t);
    out += ',';
    out += format_double(f.gamma);
    out += ',';
    out += format_double(f.theta);
    out += ',';
    out += to_string(classify_regime(t, p));
    out += '\n';
  }
  return out;
}

inline std::string state_fidelity_csv(const InputQubit& q,
                                      const std::vector<double>& times,
                                      const BathParams& p) {
  const PureState psi0 = post_first_measurement(q);
  std::string out = "t,fidelity_engine,fidelity_closed_form\n";
  for (double t : times) {
    out += format_double(t);
    out += ',';
    out += format_double(fidelity_at(psi0, t, p));
    out += ',';
    out += format_double(closed_form_cluster(q, t, p));
    out += '\n';
  }
  return out;
}

inline std::string curve_csv(const FidelityCurve& curve) {
  std::string out = "t,fidelity\n";
  for (std::size_t i = 0; i < curve.times.size(); ++i) {
    out += format_double_sig17(curve.times[i]);
    out += ',';
    out += format_double_sig17(curve.values[i]);
    out += '\n';
  }
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

// Writes the data file plus a `<path>.meta.json` sidecar describing how it
// was produced. Volatile details (timestamps, host) are deliberately absent.
inline void write_with_sidecar(const std::string& path,
                               const std::string& content,
                               const nlohmann::json& metadata) {
  write_file(path, content);
  write_file(path + ".meta.json", metadata.dump(2) + "\n");
}

}  // namespace dephasim
