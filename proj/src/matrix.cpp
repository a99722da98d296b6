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

#include "pcartan/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pcartan {

void ToleranceConfig::validate() const {
  if (!(unitarity_tol > 0.0) || !(equivalence_tol > 0.0) || !(angle_tol > 0.0)) {
    throw InvalidInput("tolerances must be strictly positive");
  }
  if (equivalence_tol < unitarity_tol) {
    throw InvalidInput("equivalence_tol must not be smaller than unitarity_tol");
  }
}

ToleranceConfig ToleranceConfig::with_equivalence(double equivalence_tol) {
  ToleranceConfig tol;
  tol.equivalence_tol = equivalence_tol;
  tol.unitarity_tol = std::min(tol.unitarity_tol, equivalence_tol);
  tol.validate();
  return tol;
}

ComplexMatrix permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int k : perm) {
    if (k < 0 || k >= n || seen[static_cast<std::size_t>(k)]) {
      throw InvalidInput("permutation_matrix: not a permutation");
    }
    seen[static_cast<std::size_t>(k)] = true;
  }
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

namespace pauli {
Matrix2c identity() { return Matrix2c::Identity(); }
Matrix2c x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2c y() {
  Matrix2c m;
  m << 0, -kI, kI, 0;
  return m;
}
Matrix2c z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw InvalidInput("haar_random_unitary: unsupported dimension " +
                       std::to_string(dim) + " (expected 2, 4 or 8)");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

double wrap_angle(double angle, double period, double lo) {
  double t = std::fmod(angle - lo, period);
  if (t < 0.0) t += period;
  // fmod can return exactly `period` after the correction above.
  if (t >= period) t -= period;
  return lo + t;
}

}  // namespace pcartan
