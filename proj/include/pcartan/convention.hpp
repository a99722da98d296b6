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

#include <string>
#include <string_view>

#include "pcartan/matrix.hpp"

namespace pcartan {

// Which degree of freedom is the outer tensor factor of the basis.
//
//   kPolarizationSpatial: {|H a1>, |H a2>, ..., |V a1>, |V a2>, ...}
//   kSpatialPolarization: {|a1 H>, |a1 V>, |a2 H>, |a2 V>, ...}
enum class DofConvention { kPolarizationSpatial, kSpatialPolarization };

std::string_view to_string(DofConvention c);

/// Parses "ps" / "sp"; throws InvalidInput otherwise.
DofConvention parse_convention(std::string_view text);

/// Index of |mode, polarization> (polarization 0 = H, 1 = V) in a basis of
/// `num_modes` spatial modes.
int basis_index(DofConvention c, int num_modes, int mode, int polarization);

/// Re-expresses an operator given in convention `c` in spatial-polarization
/// order, and back. Dimension must be 2 × number of modes.
ComplexMatrix to_sp_order(const ComplexMatrix& m, DofConvention c);
ComplexMatrix from_sp_order(const ComplexMatrix& m, DofConvention c);

}  // namespace pcartan
