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

#include <vector>

#include "pcartan/convention.hpp"
#include "pcartan/matrix.hpp"

namespace pcartan {

// Real spans of anti-Hermitian generators (i × Pauli words) splitting
// su(2^n) = l ⊕ p, with h ⊆ p the chosen Cartan subalgebra.
//
// Polarization-spatial recursion (new qubit appended on the right):
//   l = span{ su(2^{n-1}) ⊗ I, u(2^{n-1}) ⊗ σz }
//   p = span{ u(2^{n-1}) ⊗ σx, u(2^{n-1}) ⊗ σy }
//   h = span{ I ⊗ h_{n-1}, σz ⊗ h_{n-1} },             h_1 = {σx}
//
// Spatial-polarization recursion (new qubit prepended on the left):
//   l = span{ I ⊗ su(2^{n-1}), σz ⊗ u(2^{n-1}) }
//   p = span{ σx ⊗ u(2^{n-1}), σy ⊗ u(2^{n-1}) }
//   h = span{ h_{n-1} ⊗ I, h_{n-1} ⊗ σz },               h_2 = {σx⊗σy, σy⊗σx}
struct LieSpan {
  int level = 1;
  DofConvention convention = DofConvention::kPolarizationSpatial;
  std::vector<ComplexMatrix> l_basis;
  std::vector<ComplexMatrix> p_basis;
  std::vector<ComplexMatrix> h_basis;
};

/// n ∈ {1, 2, 3}; anything else throws InvalidInput.
LieSpan lie_span(int n, DofConvention convention);

struct CartanConditionReport {
  bool ll_in_l = false;
  bool lp_in_p = false;
  bool pp_in_l = false;
  bool h_abelian = false;
  bool h_maximal = false;
  // Not one of the bracket conditions, but h must live inside p for the
  // other two h checks to mean anything.
  bool h_in_p = false;

  bool all() const { return ll_in_l && lp_in_p && pp_in_l && h_abelian && h_maximal && h_in_p; }
};

/// Brute-force commutators over all basis pairs. Membership in a span is a
/// real least-squares projection with residual at most `tol.angle_tol`.
/// h_maximal holds when no element of span(p) outside span(h) commutes with
/// every element of h (the centralizer of h in p has dimension dim h).
CartanConditionReport check_cartan_conditions(const LieSpan& span, const ToleranceConfig& tol = {});

/// True when `m` lies in the real span of `basis` within `tol`.
bool in_real_span(const ComplexMatrix& m, const std::vector<ComplexMatrix>& basis, double tol);

}  // namespace pcartan
