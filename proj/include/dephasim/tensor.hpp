// Copyright 2026 the dephasim authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra over small qubit registers: state vectors,
// density matrices, tensor products, projective measurements, partial trace.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace dephasim {

using complexd = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Qubit = Eigen::Vector2cd;

// Tolerance for algebraic identities (norms, traces, Hermiticity) on
// registers of at most a few qubits in double precision.
inline constexpr double kAlgebraTol = 1e-12;

// Probability below which a measurement branch is treated as impossible:
// there is no renormalized post-measurement state.
inline constexpr double kBranchFloor = 1e-14;

class BranchImpossibleError : public std::runtime_error {
 public:
  explicit BranchImpossibleError(double probability)
      : std::runtime_error("branch impossible: outcome probability " +
                           std::to_string(probability) +
                           " is below the representable floor"),
        probability_(probability) {}
  double probability() const { return probability_; }

 private:
  double probability_;
};

namespace detail {

inline int dim_for(int n_qubits) { return 1 << n_qubits; }

inline void check_power_of_two_dim(int n_qubits, Eigen::Index size,
                                   const char* what) {
  if (n_qubits < 0 || size != static_cast<Eigen::Index>(dim_for(n_qubits))) {
    throw std::invalid_argument(std::string(what) +
                                ": dimension does not match qubit count");
  }
}

// Qubit 1 is the most significant bit of a basis index, so qubit q of an
// n-qubit register sits at bit position n-q (counted from the least
// significant bit).
inline int bit_position(int qubit, int n_qubits) { return n_qubits - qubit; }

inline int bit_at(std::uint32_t index, int position) {
  return static_cast<int>((index >> position) & 1u);
}

// Inserts bit value b at `position` into an index over the remaining bits.
inline std::uint32_t insert_bit(std::uint32_t rest, int position, int b) {
  const std::uint32_t low = rest & ((1u << position) - 1u);
  const std::uint32_t high = rest >> position;
  return (high << (position + 1)) | (static_cast<std::uint32_t>(b) << position) |
         low;
}

}  // namespace detail

// Pure state of an n-qubit register. Basis indices read as binary strings of
// qubit labels, qubit 1 most significant; label 0 corresponds to sigma_z
// eigenvalue +1 and label 1 to eigenvalue -1.
struct PureState {
  int n_qubits = 1;
  Vector amplitudes;

  PureState() : amplitudes(Vector::Zero(2)) { amplitudes[0] = 1.0; }

  PureState(int n, Vector amps) : n_qubits(n), amplitudes(std::move(amps)) {
    if (n_qubits < 1) throw std::invalid_argument("PureState: need n_qubits >= 1");
    detail::check_power_of_two_dim(n_qubits, amplitudes.size(), "PureState");
  }

  Eigen::Index dim() const { return amplitudes.size(); }

  double norm() const { return amplitudes.norm(); }

  PureState& normalize() {
    const double n = norm();
    if (n < kBranchFloor) throw std::invalid_argument("PureState: zero vector");
    amplitudes /= n;
    return *this;
  }
};

// Density matrix of an n-qubit register. n_qubits may be 0 for the empty
// register left after measuring out the last qubit (a 1x1 matrix).
struct DensityMatrix {
  int n_qubits = 1;
  Matrix elements;

  DensityMatrix() : elements(Matrix::Zero(2, 2)) { elements(0, 0) = 1.0; }

  DensityMatrix(int n, Matrix m) : n_qubits(n), elements(std::move(m)) {
    if (n_qubits < 0) throw std::invalid_argument("DensityMatrix: negative size");
    detail::check_power_of_two_dim(n_qubits, elements.rows(), "DensityMatrix");
    if (elements.rows() != elements.cols()) {
      throw std::invalid_argument("DensityMatrix: not square");
    }
  }

  Eigen::Index dim() const { return elements.rows(); }

  double trace_real() const { return elements.trace().real(); }

  double hermiticity_defect() const {
    return (elements - elements.adjoint()).cwiseAbs().maxCoeff();
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(elements,
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }
};

inline DensityMatrix outer(const PureState& psi) {
  return DensityMatrix(psi.n_qubits,
                       psi.amplitudes * psi.amplitudes.adjoint());
}

inline PureState tensor(const PureState& a, const PureState& b) {
  Vector out(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    out.segment(i * b.dim(), b.dim()) = a.amplitudes[i] * b.amplitudes;
  }
  return PureState(a.n_qubits + b.n_qubits, std::move(out));
}

// Expectation <psi|rho|psi>.
inline double overlap(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  const complexd v = psi.amplitudes.adjoint() * rho.elements * psi.amplitudes;
  return v.real();
}

// Measures `qubit` along |axis><axis|, removes it from the register, and
// renormalizes. Returns the post-measurement state of the remaining qubits
// together with the outcome probability.
inline std::pair<DensityMatrix, double> project_and_renormalize(
    const DensityMatrix& rho, int qubit, const Qubit& axis) {
  if (qubit < 1 || qubit > rho.n_qubits) {
    throw std::invalid_argument("project_and_renormalize: qubit out of range");
  }
  const int pos = detail::bit_position(qubit, rho.n_qubits);
  const int rest_dim = static_cast<int>(rho.dim()) / 2;

  Matrix out = Matrix::Zero(rest_dim, rest_dim);
  for (int r = 0; r < rest_dim; ++r) {
    for (int c = 0; c < rest_dim; ++c) {
      complexd acc = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          acc += std::conj(axis[a]) * axis[b] *
                 rho.elements(detail::insert_bit(r, pos, a),
                              detail::insert_bit(c, pos, b));
        }
      }
      out(r, c) = acc;
    }
  }

  const double prob = out.trace().real();
  if (prob < kBranchFloor) throw BranchImpossibleError(prob);
  out /= prob;
  return {DensityMatrix(rho.n_qubits - 1, std::move(out)), prob};
}

// Same measurement, but the projected qubit stays in the register (collapsed
// onto |axis>). Its coherences with the rest then keep participating in any
// collective dynamics applied afterwards.
inline std::pair<DensityMatrix, double> project_and_retain(
    const DensityMatrix& rho, int qubit, const Qubit& axis) {
  auto [reduced, prob] = project_and_renormalize(rho, qubit, axis);
  const int pos = detail::bit_position(qubit, rho.n_qubits);
  const int rest_dim = static_cast<int>(reduced.dim());

  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (int r = 0; r < rest_dim; ++r) {
    for (int c = 0; c < rest_dim; ++c) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          out(detail::insert_bit(r, pos, a), detail::insert_bit(c, pos, b)) =
              reduced.elements(r, c) * axis[a] * std::conj(axis[b]);
        }
      }
    }
  }
  return {DensityMatrix(rho.n_qubits, std::move(out)), prob};
}

// Traces out `qubit`, returning the reduced state of the remaining register.
inline DensityMatrix partial_trace(const DensityMatrix& rho, int qubit) {
  if (qubit < 1 || qubit > rho.n_qubits) {
    throw std::invalid_argument("partial_trace: qubit out of range");
  }
  const int pos = detail::bit_position(qubit, rho.n_qubits);
  const int rest_dim = static_cast<int>(rho.dim()) / 2;

  Matrix out = Matrix::Zero(rest_dim, rest_dim);
  for (int r = 0; r < rest_dim; ++r) {
    for (int c = 0; c < rest_dim; ++c) {
      for (int a = 0; a < 2; ++a) {
        out(r, c) += rho.elements(detail::insert_bit(r, pos, a),
                                  detail::insert_bit(c, pos, a));
      }
    }
  }
  return DensityMatrix(rho.n_qubits - 1, std::move(out));
}

// Amplitude-level projection for pure states; cheaper than going through the
// density matrix and keeps the result exactly pure. Returns the renormalized
// remaining register and the outcome probability.
inline std::pair<PureState, double> project_pure(const PureState& psi,
                                                 int qubit, const Qubit& axis) {
  if (qubit < 1 || qubit > psi.n_qubits) {
    throw std::invalid_argument("project_pure: qubit out of range");
  }
  const int pos = detail::bit_position(qubit, psi.n_qubits);
  const Eigen::Index rest_dim = psi.dim() / 2;

  Vector out(rest_dim);
  for (Eigen::Index r = 0; r < rest_dim; ++r) {
    out[r] = std::conj(axis[0]) *
                 psi.amplitudes[detail::insert_bit(static_cast<std::uint32_t>(r),
                                                   pos, 0)] +
             std::conj(axis[1]) *
                 psi.amplitudes[detail::insert_bit(static_cast<std::uint32_t>(r),
                                                   pos, 1)];
  }
  const double prob = out.squaredNorm();
  if (prob < kBranchFloor) throw BranchImpossibleError(prob);
  out /= std::sqrt(prob);
  return {PureState(psi.n_qubits - 1, std::move(out)), prob};
}

}  // namespace dephasim
