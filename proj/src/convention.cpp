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

#include "pcartan/convention.hpp"

#include <vector>

namespace pcartan {

std::string_view to_string(DofConvention c) {
  return c == DofConvention::kPolarizationSpatial ? "ps" : "sp";
}

DofConvention parse_convention(std::string_view text) {
  if (text == "ps") return DofConvention::kPolarizationSpatial;
  if (text == "sp") return DofConvention::kSpatialPolarization;
  throw InvalidInput("unknown convention '" + std::string(text) + "' (expected ps or sp)");
}

int basis_index(DofConvention c, int num_modes, int mode, int polarization) {
  return c == DofConvention::kSpatialPolarization ? 2 * mode + polarization
                                                  : polarization * num_modes + mode;
}

namespace {

// perm[sp_index] = index of the same basis state in convention c.
ComplexMatrix sp_permutation(Eigen::Index dim, DofConvention c) {
  if (dim % 2 != 0) {
    throw InvalidInput("basis reordering needs an even dimension, got " + std::to_string(dim));
  }
  const int modes = static_cast<int>(dim / 2);
  std::vector<int> perm(static_cast<std::size_t>(dim));
  for (int mode = 0; mode < modes; ++mode) {
    for (int pol = 0; pol < 2; ++pol) {
      perm[static_cast<std::size_t>(2 * mode + pol)] = basis_index(c, modes, mode, pol);
    }
  }
  return permutation_matrix(perm);
}

}  // namespace

ComplexMatrix to_sp_order(const ComplexMatrix& m, DofConvention c) {
  if (c == DofConvention::kSpatialPolarization) return m;
  const ComplexMatrix p = sp_permutation(m.rows(), c);
  return p * m * p.transpose();
}

ComplexMatrix from_sp_order(const ComplexMatrix& m, DofConvention c) {
  if (c == DofConvention::kSpatialPolarization) return m;
  const ComplexMatrix p = sp_permutation(m.rows(), c);
  return p.transpose() * m * p;
}

}  // namespace pcartan
