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

#include <array>

#include "pcartan/matrix.hpp"

namespace pcartan {

// Cosine-sine decomposition of a 2p×2p unitary split into equal p×p blocks:
//
//   U = [ left_top          ] [ C  -S ] [ right_top              ]
//       [       left_bottom ] [ S   C ] [            right_bottom ]
//
// with C = diag(cos angles), S = diag(sin angles). Index k of the top block
// is coupled to index k of the bottom block only.
//
// Conventions:
//   * angles lie in [0, π/2] and are sorted in non-increasing order;
//   * cosines and sines are non-negative;
//   * the first entry of each column of left_top with modulus above
//     angle_tol is real and non-negative.
struct CosineSine {
  ComplexMatrix left_top;
  ComplexMatrix left_bottom;
  ComplexMatrix right_top;
  ComplexMatrix right_bottom;
  Eigen::VectorXd angles;
};

/// Throws InvalidInput for odd or zero dimension, or a non-unitary input;
/// NumericalFailure if the factors do not reproduce the input within
/// tol.equivalence_tol.
CosineSine cosine_sine_decompose(const ComplexMatrix& u, const ToleranceConfig& tol = {});

/// The central [[C, -S], [S, C]] factor for the given angles.
ComplexMatrix cs_central(const Eigen::VectorXd& angles);

ComplexMatrix reassemble(const CosineSine& f);

// The 4×4 special case used by both two-qubit factorizations.
struct BlockCsdResult {
  std::array<Matrix2c, 2> left_blocks;
  std::array<Matrix2c, 2> right_blocks;
  double theta_a = 0.0;
  double theta_b = 0.0;
};

BlockCsdResult block_csd(const ComplexMatrix& u, const ToleranceConfig& tol = {});

Matrix4c cs_matrix(double theta_a, double theta_b);

Matrix4c reassemble(const BlockCsdResult& r);

}  // namespace pcartan
