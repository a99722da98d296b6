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

#include "pcartan/simulator.hpp"

#include <string>

namespace pcartan {

namespace {

void check_mode(int m, int num_modes) {
  if (m < 0 || m >= num_modes) {
    throw InvalidInput("element mode " + std::to_string(m) + " out of range for " +
                       std::to_string(num_modes) + " spatial modes");
  }
}

// Applies the element in place to the rows of `state` (SP order), i.e.
// state ← E · state.
void apply_sp(const OpticalElement& e, ComplexMatrix& state) {
  if (e.is_pbs()) {
    state.row(2 * e.mode).swap(state.row(2 * e.partner));
    return;
  }
  const Matrix2c g = local_matrix(e);
  const Eigen::Index r = 2 * e.mode;
  const Eigen::MatrixXcd block = state.middleRows(r, 2);
  state.middleRows(r, 2) = g * block;
}

}  // namespace

ComplexMatrix element_unitary(const OpticalElement& e, DofConvention convention, int num_modes) {
  if (num_modes < 1) throw InvalidInput("element_unitary: need at least one spatial mode");
  check_mode(e.mode, num_modes);
  if (e.is_pbs()) {
    check_mode(e.partner, num_modes);
    if (e.partner == e.mode) throw InvalidInput("element_unitary: PBS needs two distinct modes");
  }
  ComplexMatrix u = ComplexMatrix::Identity(2 * num_modes, 2 * num_modes);
  apply_sp(e, u);
  return from_sp_order(u, convention);
}

ComplexMatrix simulate(const OpticalCircuit& c) {
  c.validate();
  const Eigen::Index dim = 2 * c.num_spatial_modes;
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& e : c.elements) apply_sp(e, u);
  return from_sp_order(u, c.convention);
}

VerificationReport verify(const OpticalCircuit& c, const ComplexMatrix& target,
                          const ToleranceConfig& tol) {
  const Eigen::Index dim = 2 * c.num_spatial_modes;
  if (target.rows() != dim || target.cols() != dim) {
    throw InvalidInput("verify: circuit acts on dimension " + std::to_string(dim) +
                       " but the target is " + std::to_string(target.rows()) + "x" +
                       std::to_string(target.cols()));
  }
  const PhaseDistance pd = phase_distance(simulate(c), target);
  VerificationReport r;
  r.distance = pd.distance;
  r.global_phase = pd.phase;
  r.passed = pd.distance <= tol.equivalence_tol;
  r.element_total = static_cast<int>(c.elements.size());
  return r;
}

}  // namespace pcartan
