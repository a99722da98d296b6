// Copyright 2026 The pcartan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcartan {

template <typename Scalar>
using CMatrixX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar, int N>
using CMatrixN = Eigen::Matrix<std::complex<Scalar>, N, N>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrixX<double>;
using Matrix2c = CMatrixN<double, 2>;
using Matrix4c = CMatrixN<double, 4>;
using Matrix8c = CMatrixN<double, 8>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Rejected user input: malformed files, wrong dimensions, non-unitary
// matrices, bad schema fields.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A decomposition or synthesis step failed its own internal consistency
// check.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ToleranceConfig {
  double unitarity_tol = 1e-10;
  double equivalence_tol = 1e-9;
  double angle_tol = 1e-12;

  // Throws InvalidInput if a field is non-positive or
  // equivalence_tol < unitarity_tol.
  void validate() const;

  // Tolerances derived from a single user-facing equivalence threshold,
  // as accepted by the command line. unitarity_tol is clamped so the
  // ordering invariant still holds.
  static ToleranceConfig with_equivalence(double equivalence_tol);
};

/// Largest absolute entry. All tolerances in the library are measured in
/// this norm.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// ‖M†M − I‖ in the max-entry norm. Non-square input is reported as
/// infinitely far from unitary.
template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  using Plain = typename Derived::PlainObject;
  const Plain gram = m.adjoint() * m;
  return max_abs(gram - Plain::Identity(m.rows(), m.cols()));
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m,
                const ToleranceConfig& tol = {}) {
  return unitarity_residual(m) <= tol.unitarity_tol;
}

struct PhaseDistance {
  double distance = 0.0;
  double phase = 0.0;
};

/// Distance between A and B once A is rotated by the global phase that best
/// aligns it with B: phase = arg tr(A†B) (0 when the trace vanishes) and
/// distance = ‖e^{i·phase}A − B‖_max.
template <typename DerivedA, typename DerivedB>
PhaseDistance phase_distance(const Eigen::MatrixBase<DerivedA>& a,
                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("phase_distance: dimension mismatch (" +
                       std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " +
                       std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()) + ")");
  }
  const Complex overlap = (a.adjoint() * b).trace();
  PhaseDistance out;
  out.phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  out.distance = max_abs(std::polar(1.0, out.phase) * a - b);
  return out;
}

/// Block-diagonal direct sum a ⊕ b.
template <typename DerivedA, typename DerivedB>
ComplexMatrix direct_sum(const Eigen::MatrixBase<DerivedA>& a,
                         const Eigen::MatrixBase<DerivedB>& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

/// Kronecker product a ⊗ b.
template <typename DerivedA, typename DerivedB>
ComplexMatrix kron(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Permutation matrix P with P·e_{perm[k]} = e_k, so (P M Pᵀ)(i, j) =
/// M(perm[i], perm[j]).
ComplexMatrix permutation_matrix(const std::vector<int>& perm);

namespace pauli {
Matrix2c identity();
Matrix2c x();
Matrix2c y();
Matrix2c z();
}  // namespace pauli

/// Haar-distributed unitary of dimension 2, 4 or 8: QR of a seeded complex
/// Gaussian matrix with the diagonal of R rotated onto the positive reals.
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

/// Wraps an angle into [lo, lo + period).
double wrap_angle(double angle, double period = 2.0 * kPi, double lo = 0.0);

}  // namespace pcartan
