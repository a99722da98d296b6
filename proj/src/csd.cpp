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

#include "pcartan/csd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>
#include <string>

namespace pcartan {

namespace {

// Closest unitary in the Frobenius sense (polar factor).
ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Complex unit_phase(Complex z) {
  const double mag = std::abs(z);
  return mag > 0.0 ? z / mag : Complex(1.0);
}

}  // namespace

// Stewart's two-step scheme: the SVD of the top-left block fixes the
// cosines, the columns of the bottom-left block with large sines are
// orthonormalised by QR, and the small-sine remainder is re-diagonalised by
// a second SVD so that both C and S stay accurate near 0 and π/2.
CosineSine cosine_sine_decompose(const ComplexMatrix& u, const ToleranceConfig& tol) {
  if (u.rows() != u.cols() || u.rows() == 0 || u.rows() % 2 != 0) {
    throw InvalidInput("cosine_sine_decompose: expected an even, non-empty square matrix, got " +
                       std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
  }
  const double residual = unitarity_residual(u);
  if (residual > tol.unitarity_tol) {
    throw InvalidInput("cosine_sine_decompose: input is not unitary (residual " +
                       std::to_string(residual) + ")");
  }
  const Eigen::Index p = u.rows() / 2;
  const ComplexMatrix u11 = u.topLeftCorner(p, p);
  const ComplexMatrix u12 = u.topRightCorner(p, p);
  const ComplexMatrix u21 = u.bottomLeftCorner(p, p);
  const ComplexMatrix u22 = u.bottomRightCorner(p, p);

  // Order so the cosines ascend and the angles descend; equal singular
  // values keep the SVD's order.
  Eigen::JacobiSVD<ComplexMatrix> svd(u11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return sv(a) < sv(b); });
  ComplexMatrix u1(p, p), v1(p, p);
  ComplexMatrix c = ComplexMatrix::Zero(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    u1.col(j) = svd.matrixU().col(src);
    v1.col(j) = svd.matrixV().col(src);
    c(j, j) = std::min(sv(src), 1.0);
  }

  const ComplexMatrix q2 = u21 * v1;
  Eigen::Index k = 0;
  while (k < p && c(k, k).real() <= std::sqrt(0.5)) ++k;

  ComplexMatrix u2 = ComplexMatrix::Identity(p, p);
  if (k > 0) {
    Eigen::HouseholderQR<ComplexMatrix> qr(q2.leftCols(k));
    u2 = qr.householderQ() * ComplexMatrix::Identity(p, p);
  }
  ComplexMatrix s = u2.adjoint() * q2;

  if (k < p) {
    const Eigen::Index r = p - k;
    Eigen::JacobiSVD<ComplexMatrix> svd2(s.bottomRightCorner(r, r),
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
    u2.rightCols(r) = u2.rightCols(r) * svd2.matrixU();
    v1.rightCols(r) = v1.rightCols(r) * svd2.matrixV();
    s.bottomRightCorner(r, r) = svd2.singularValues().cast<Complex>().asDiagonal();

    const ComplexMatrix c_tail = c.bottomRightCorner(r, r) * svd2.matrixV();
    Eigen::HouseholderQR<ComplexMatrix> qr2(c_tail);
    u1.rightCols(r) = u1.rightCols(r) * (qr2.householderQ() * ComplexMatrix::Identity(r, r));
    c.bottomRightCorner(r, r) = qr2.matrixQR().triangularView<Eigen::Upper>();
  }

  // Make both diagonals real and non-negative.
  Eigen::VectorXd cos_v(p), sin_v(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const Complex pc = unit_phase(c(j, j));
    u1.col(j) *= pc;
    cos_v(j) = std::abs(c(j, j));
    const Complex ps = unit_phase(s(j, j));
    u2.col(j) *= ps;
    sin_v(j) = std::abs(s(j, j));
  }

  CosineSine out;
  out.angles.resize(p);
  for (Eigen::Index j = 0; j < p; ++j) out.angles(j) = std::atan2(sin_v(j), cos_v(j));

  // Right-bottom block, one row at a time from whichever of U12 = -u1 S v2h
  // and U22 = u2 C v2h is better conditioned for that index.
  const ComplexMatrix from_u12 = -(u1.adjoint() * u12);
  const ComplexMatrix from_u22 = u2.adjoint() * u22;
  ComplexMatrix v2h(p, p);
  for (Eigen::Index j = 0; j < p; ++j) {
    if (sin_v(j) >= cos_v(j)) {
      v2h.row(j) = from_u12.row(j) / sin_v(j);
    } else {
      v2h.row(j) = from_u22.row(j) / cos_v(j);
    }
  }
  v2h = nearest_unitary(v2h);
  ComplexMatrix v1h = v1.adjoint();

  // Fix the per-index U(1) gauge shared by all four blocks.
  for (Eigen::Index j = 0; j < p; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) {
      const Complex z = u1(i, j);
      if (std::abs(z) > tol.angle_tol) {
        const Complex g = std::conj(unit_phase(z));
        u1.col(j) *= g;
        u2.col(j) *= g;
        v1h.row(j) *= std::conj(g);
        v2h.row(j) *= std::conj(g);
        break;
      }
    }
  }

  out.left_top = std::move(u1);
  out.left_bottom = std::move(u2);
  out.right_top = std::move(v1h);
  out.right_bottom = std::move(v2h);

  const double err = max_abs(reassemble(out) - u);
  if (err > tol.equivalence_tol) {
    throw NumericalFailure("cosine_sine_decompose: reassembly error " + std::to_string(err) +
                           " exceeds tolerance");
  }
  return out;
}

ComplexMatrix cs_central(const Eigen::VectorXd& angles) {
  const Eigen::Index p = angles.size();
  ComplexMatrix m = ComplexMatrix::Zero(2 * p, 2 * p);
  for (Eigen::Index j = 0; j < p; ++j) {
    const double c = std::cos(angles(j));
    const double s = std::sin(angles(j));
    m(j, j) = c;
    m(j, j + p) = -s;
    m(j + p, j) = s;
    m(j + p, j + p) = c;
  }
  return m;
}

ComplexMatrix reassemble(const CosineSine& f) {
  return direct_sum(f.left_top, f.left_bottom) * cs_central(f.angles) *
         direct_sum(f.right_top, f.right_bottom);
}

BlockCsdResult block_csd(const ComplexMatrix& u, const ToleranceConfig& tol) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw InvalidInput("block_csd: expected a 4x4 matrix, got " + std::to_string(u.rows()) +
                       "x" + std::to_string(u.cols()));
  }
  const CosineSine f = cosine_sine_decompose(u, tol);
  BlockCsdResult r;
  r.left_blocks = {f.left_top, f.left_bottom};
  r.right_blocks = {f.right_top, f.right_bottom};
  r.theta_a = f.angles(0);
  r.theta_b = f.angles(1);
  return r;
}

Matrix4c cs_matrix(double theta_a, double theta_b) {
  return cs_central(Eigen::Vector2d(theta_a, theta_b));
}

Matrix4c reassemble(const BlockCsdResult& r) {
  const Matrix4c left = direct_sum(r.left_blocks[0], r.left_blocks[1]);
  const Matrix4c right = direct_sum(r.right_blocks[0], r.right_blocks[1]);
  return left * cs_matrix(r.theta_a, r.theta_b) * right;
}

}  // namespace pcartan
