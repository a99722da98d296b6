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

#include "pcartan/circuit.hpp"
#include "pcartan/convention.hpp"
#include "pcartan/matrix.hpp"

namespace pcartan {

/// Action of one element on the 2m-dimensional single-photon space, in the
/// basis order of `convention`. A PBS exchanges |H a_i> and |H a_j> and
/// leaves everything else alone; the other elements act on one mode's
/// polarization. Throws InvalidInput for a mode outside [0, m).
ComplexMatrix element_unitary(const OpticalElement& e, DofConvention convention, int num_modes);

/// Ordered product of the element embeddings; the first element is the
/// rightmost factor.
ComplexMatrix simulate(const OpticalCircuit& c);

struct VerificationReport {
  double distance = 0.0;      // max-entry, after the best global phase
  double global_phase = 0.0;  // phase applied to the simulated matrix
  bool passed = false;
  int element_total = 0;
};

/// Throws InvalidInput when the target dimension is not 2 × spatial modes.
VerificationReport verify(const OpticalCircuit& c, const ComplexMatrix& target,
                          const ToleranceConfig& tol = {});

}  // namespace pcartan
