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

#include "pcartan/cartan.hpp"

#include <cmath>
#include <string>

#include "pcartan/csd.hpp"
#include "pcartan/waveplate.hpp"

namespace pcartan {

namespace {

void require_unitary(const ComplexMatrix& u, Eigen::Index dim, const char* who,
                     const ToleranceConfig& tol) {
  if (u.rows() != dim || u.cols() != dim) {
    throw InvalidInput(std::string(who) + ": expected a " + std::to_string(dim) + "x" +
                       std::to_string(dim) + " matrix, got " + std::to_string(u.rows()) + "x" +
                       std::to_string(u.cols()));
  }
  const double residual = unitarity_residual(u);
  if (!(residual <= tol.unitarity_tol)) {
    throw InvalidInput(std::string(who) + ": input is not unitary (residual " +
                       std::to_string(residual) + ")");
  }
}

Matrix4c block_diag(const std::array<Matrix2c, 2>& g) { return direct_sum(g[0], g[1]); }

// PBS on modes (a1, a2) in SP order: exchanges a1H and a2H.
Matrix4c pbs_sp() { return permutation_matrix({2, 1, 0, 3}); }

}  // namespace

Matrix4c central_A(double alpha, double beta, DofConvention convention) {
  const double t1 = alpha + beta;
  const double t2 = alpha - beta;
  const double c1 = std::cos(t1), s1 = std::sin(t1);
  const double c2 = std::cos(t2), s2 = std::sin(t2);
  Matrix4c a = Matrix4c::Zero();
  if (convention == DofConvention::kPolarizationSpatial) {
    a(0, 0) = a(1, 1) = c1;
    a(0, 1) = a(1, 0) = kI * s1;
    a(2, 2) = a(3, 3) = c2;
    a(2, 3) = a(3, 2) = kI * s2;
  } else {
    // σx⊗σy and σy⊗σx commute and square to I, and their product is
    // -σz⊗σz; the exponential splits into rotations on (0,3) and (1,2).
    a(0, 0) = a(3, 3) = c1;
    a(0, 3) = s1;
    a(3, 0) = -s1;
    a(1, 1) = a(2, 2) = c2;
    a(1, 2) = -s2;
    a(2, 1) = s2;
  }
  return a;
}

CartanFactors decompose(const ComplexMatrix& u, DofConvention convention,
                        const ToleranceConfig& tol, AnglePlacement placement) {
  require_unitary(u, 4, "decompose", tol);
  tol.validate();

  CartanFactors f;
  f.convention = convention;
  f.global_phase = std::arg(u.determinant()) / 4.0;
  const Matrix4c u_sp = to_sp_order(std::polar(1.0, -f.global_phase) * u, convention);
  const BlockCsdResult r = block_csd(u_sp, tol);
  const auto& [u1, u2] = r.left_blocks;
  const auto& [v1, v2] = r.right_blocks;

  if (std::max(r.theta_a, r.theta_b) <= tol.angle_tol) {
    // Central factor is the identity; no basis change is needed around it.
    f.left_gates = r.left_blocks;
    f.right_gates = r.right_blocks;
  } else if (convention == DofConvention::kPolarizationSpatial) {
    if (placement == AnglePlacement::kLargerOnA1) {
      // CS(θ1, θ2) = (I ⊕ -iI) · A · (I ⊕ iI) in SP order.
      f.theta1 = r.theta_a;
      f.theta2 = r.theta_b;
      f.left_gates = {u1, -kI * u2};
      f.right_gates = {v1, kI * v2};
    } else {
      // CS(θ2, θ1) = (σx ⊕ -iσx) · A · (σx ⊕ iσx).
      f.theta1 = r.theta_b;
      f.theta2 = r.theta_a;
      f.left_gates = {u1 * pauli::x(), u2 * (-kI * pauli::x())};
      f.right_gates = {pauli::x() * v1, (kI * pauli::x()) * v2};
    }
  } else {
    if (placement == AnglePlacement::kLargerOnA1) {
      // CS(θ2, θ1) = (σx ⊕ σz) · Ã · (σx ⊕ σz).
      f.theta1 = r.theta_b;
      f.theta2 = r.theta_a;
      f.left_gates = {u1 * pauli::x(), u2 * pauli::z()};
      f.right_gates = {pauli::x() * v1, pauli::z() * v2};
    } else {
      // CS(θ1, θ2) = (I ⊕ -iσy) · Ã · (I ⊕ iσy).
      f.theta1 = r.theta_a;
      f.theta2 = r.theta_b;
      f.left_gates = {u1, u2 * (-kI * pauli::y())};
      f.right_gates = {v1, (kI * pauli::y()) * v2};
    }
  }
  f.alpha = 0.5 * (f.theta1 + f.theta2);
  f.beta = 0.5 * (f.theta1 - f.theta2);

  const double err = max_abs(reassemble(f) - u);
  if (!(err <= tol.equivalence_tol)) {
    throw NumericalFailure("decompose: reassembly error " + std::to_string(err));
  }
  return f;
}

Matrix4c reassemble(const CartanFactors& f) {
  const Matrix4c a_sp = to_sp_order(central_A(f.alpha, f.beta, f.convention), f.convention);
  const Matrix4c m = block_diag(f.left_gates) * a_sp * block_diag(f.right_gates);
  return std::polar(1.0, f.global_phase) * from_sp_order(m, f.convention);
}

OpticalFactors absorb_bookends(const CartanFactors& f) {
  OpticalFactors o;
  o.convention = f.convention;
  o.global_phase = f.global_phase;
  const auto& [l1, l2] = f.left_gates;
  const auto& [r1, r2] = f.right_gates;
  if (f.convention == DofConvention::kPolarizationSpatial) {
    o.left_gates = {l1 * (kI * pauli::x()), l2 * pauli::z()};
    o.right_gates = {(-kI * pauli::y()) * r1, -kI * r2};
    o.hwp_angles = {0.5 * f.theta1, 0.5 * f.theta2};
  } else {
    const Matrix2c d = -kI * pauli::z();
    o.left_gates = {l1 * d, l2 * d};
    o.right_gates = {r1, r2};
    o.hwp_angles = {0.5 * f.theta2, 0.5 * f.theta1};
  }
  return o;
}

Matrix4c optical_core(double hwp_a1, double hwp_a2, DofConvention convention) {
  const Matrix4c p = pbs_sp();
  const Matrix4c c = direct_sum(hwp_matrix(hwp_a1), hwp_matrix(hwp_a2));
  return from_sp_order(p * c * p, convention);
}

Matrix4c reassemble(const OpticalFactors& f) {
  const Matrix4c core = to_sp_order(optical_core(f.hwp_angles[0], f.hwp_angles[1], f.convention),
                                    f.convention);
  const Matrix4c m = block_diag(f.left_gates) * core * block_diag(f.right_gates);
  return std::polar(1.0, f.global_phase) * from_sp_order(m, f.convention);
}

namespace {

// Restricted to one pair (a_i, a_j) of the m = 4 layer, the cosine-sine block
// CS(φa, φb) equals (E_i ⊕ E_j) · gadget(φa/2, φb/2) · (F_i ⊕ F_j).
Matrix2c gadget_left_top() { return pauli::x() * (-kI * pauli::z()); }
Matrix2c gadget_left_bottom() { return -kI * Matrix2c::Identity(); }
Matrix2c gadget_right_top() { return pauli::x(); }
Matrix2c gadget_right_bottom() { return pauli::z(); }

Matrix4c pair_diag(const Matrix2c& g, const std::array<bool, 2>& active) {
  return direct_sum(active[0] ? g : Matrix2c::Identity(), active[1] ? g : Matrix2c::Identity());
}

}  // namespace

RecursiveFactors decompose_m4(const ComplexMatrix& u, const ToleranceConfig& tol) {
  require_unitary(u, 8, "decompose_m4", tol);
  tol.validate();

  RecursiveFactors f;
  f.global_phase = std::arg(u.determinant()) / 8.0;
  const CosineSine cs = cosine_sine_decompose(std::polar(1.0, -f.global_phase) * u, tol);

  for (int k = 0; k < 4; ++k) f.angles[static_cast<std::size_t>(k)] = cs.angles(k);
  for (int p = 0; p < 2; ++p) {
    const std::size_t a = static_cast<std::size_t>(2 * p);
    f.pair_active[static_cast<std::size_t>(p)] =
        std::max(f.angles[a], f.angles[a + 1]) > tol.angle_tol;
    if (!f.pair_active[static_cast<std::size_t>(p)]) f.angles[a] = f.angles[a + 1] = 0.0;
  }

  f.left_top = cs.left_top * pair_diag(gadget_left_top(), f.pair_active);
  f.left_bottom = cs.left_bottom * pair_diag(gadget_left_bottom(), f.pair_active);
  f.right_top = pair_diag(gadget_right_top(), f.pair_active) * cs.right_top;
  f.right_bottom = pair_diag(gadget_right_bottom(), f.pair_active) * cs.right_bottom;

  const double err = max_abs(reassemble(f) - u);
  if (!(err <= tol.equivalence_tol)) {
    throw NumericalFailure("decompose_m4: reassembly error " + std::to_string(err));
  }
  return f;
}

Matrix8c m4_central(const std::array<double, 4>& angles, const std::array<bool, 2>& pair_active) {
  Matrix8c c = Matrix8c::Identity();
  for (int p = 0; p < 2; ++p) {
    if (!pair_active[static_cast<std::size_t>(p)]) continue;
    // Pair (a_{p+1}, a_{p+3}); SP indices 2p, 2p+1 and 2p+4, 2p+5.
    const int i = 2 * p, j = 2 * p + 4;
    const Matrix4c g = pbs_sp() *
                       direct_sum(hwp_matrix(0.5 * angles[static_cast<std::size_t>(2 * p)]),
                                  hwp_matrix(0.5 * angles[static_cast<std::size_t>(2 * p + 1)])) *
                       pbs_sp();
    const std::array<int, 4> idx = {i, i + 1, j, j + 1};
    for (int r = 0; r < 4; ++r) {
      for (int s = 0; s < 4; ++s) c(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(s)]) = g(r, s);
    }
  }
  return c;
}

Matrix8c reassemble(const RecursiveFactors& f) {
  const Matrix8c left = direct_sum(f.left_top, f.left_bottom);
  const Matrix8c right = direct_sum(f.right_top, f.right_bottom);
  return std::polar(1.0, f.global_phase) * left * m4_central(f.angles, f.pair_active) * right;
}

}  // namespace pcartan
