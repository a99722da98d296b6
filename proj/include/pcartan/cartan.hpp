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

#include "pcartan/convention.hpp"
#include "pcartan/lie_algebra.hpp"
#include "pcartan/matrix.hpp"

namespace pcartan {

// U = e^{i·global_phase} (L1 ⊕ L2) · A(α, β) · (R1 ⊕ R2), where Lk, Rk act on
// the polarization of spatial mode a_k and A is central_A(α, β, convention).
struct CartanFactors {
  DofConvention convention = DofConvention::kSpatialPolarization;
  std::array<Matrix2c, 2> left_gates{Matrix2c::Identity(), Matrix2c::Identity()};
  std::array<Matrix2c, 2> right_gates{Matrix2c::Identity(), Matrix2c::Identity()};
  double alpha = 0.0;
  double beta = 0.0;
  double theta1 = 0.0;  // alpha + beta
  double theta2 = 0.0;  // alpha - beta
  double global_phase = 0.0;
};

/// PS: blockdiag(e^{iθ1σx}, e^{iθ2σx}) in PS order.
/// SP: exp(i(α σx⊗σy + β σy⊗σx)) in SP order.
/// θ1 = α + β, θ2 = α − β.
Matrix4c central_A(double alpha, double beta, DofConvention convention);

// Which arm's HWP in the physical layout carries the larger central angle.
// Both placements are exact; they differ only in the outer gates.
enum class AnglePlacement {
  kLargerOnA1,  // PS: θ1 ≥ θ2, SP: θ2 ≥ θ1
  kLargerOnA2,  // PS: θ2 ≥ θ1, SP: θ1 ≥ θ2
};

/// Throws InvalidInput when U is not a unitary 4×4 matrix, NumericalFailure
/// when the factors fail to reproduce U within tol.equivalence_tol.
/// θ1, θ2 land in [0, π/2].
CartanFactors decompose(const ComplexMatrix& u, DofConvention convention,
                        const ToleranceConfig& tol = {},
                        AnglePlacement placement = AnglePlacement::kLargerOnA1);

Matrix4c reassemble(const CartanFactors& f);

// Physical form of a CartanFactors: the fixed first and last factors of the
// central block are folded into the outer gates, leaving
//   PBS · (HWP(hwp_angles[0]) on a1 ⊕ HWP(hwp_angles[1]) on a2) · PBS
// where the PBS exchanges the H components of a1 and a2.
//   PS: L1·iσx, L2·σz, −iσy·R1, −i·R2, plates at (θ1/2, θ2/2).
//   SP: L1·(−iσz), L2·(−iσz), R1, R2, plates at (θ2/2, θ1/2).
struct OpticalFactors {
  DofConvention convention = DofConvention::kSpatialPolarization;
  std::array<Matrix2c, 2> left_gates{Matrix2c::Identity(), Matrix2c::Identity()};
  std::array<Matrix2c, 2> right_gates{Matrix2c::Identity(), Matrix2c::Identity()};
  std::array<double, 2> hwp_angles{0.0, 0.0};
  double global_phase = 0.0;
};

OpticalFactors absorb_bookends(const CartanFactors& f);

/// PBS · HWP ⊕ HWP · PBS in the given convention's basis order.
Matrix4c optical_core(double hwp_a1, double hwp_a2, DofConvention convention);

Matrix4c reassemble(const OpticalFactors& f);

// Three-qubit recursion, spatial-polarization order {a1H, a1V, ..., a4V}:
//   U = e^{i·global_phase} (K1 ⊕ K2) · C · (K3 ⊕ K4)
// K1, K3 act on modes (a1, a2) and K2, K4 on (a3, a4). C is a layer of two
// pair gadgets, PBS(a_i, a_j) · HWP on a_i ⊕ HWP on a_j · PBS(a_i, a_j) for
// (a1, a3) and (a2, a4), at plate angles angles[k] / 2 in the order a1, a3,
// a2, a4. The cosine-sine angles couple a1H↔a3H, a1V↔a3V, a2H↔a4H, a2V↔a4V.
// A gadget whose two angles both vanish is switched off (identity) and its
// fixed signs are not folded into the blocks.
struct RecursiveFactors {
  Matrix4c left_top = Matrix4c::Identity();      // K1
  Matrix4c left_bottom = Matrix4c::Identity();   // K2
  Matrix4c right_top = Matrix4c::Identity();     // K3
  Matrix4c right_bottom = Matrix4c::Identity();  // K4
  std::array<double, 4> angles{0.0, 0.0, 0.0, 0.0};
  std::array<bool, 2> pair_active{false, false};
  double global_phase = 0.0;
};

RecursiveFactors decompose_m4(const ComplexMatrix& u, const ToleranceConfig& tol = {});

/// The central layer C of RecursiveFactors as an 8×8 matrix.
Matrix8c m4_central(const std::array<double, 4>& angles, const std::array<bool, 2>& pair_active);

Matrix8c reassemble(const RecursiveFactors& f);

}  // namespace pcartan
