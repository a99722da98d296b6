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

#include <cmath>
#include <optional>

#include "pcartan/matrix.hpp"

namespace pcartan {

// Jones matrices of the three element types in the {H, V} basis. `theta` is
// the fast-axis angle for the plates and the phase for the shifter.

template <typename Scalar = double>
CMatrixN<Scalar, 2> ps_matrix(Scalar theta) {
  return std::polar(Scalar(1), theta) * CMatrixN<Scalar, 2>::Identity();
}

template <typename Scalar = double>
CMatrixN<Scalar, 2> hwp_matrix(Scalar theta) {
  using std::cos;
  using std::sin;
  const std::complex<Scalar> i(0, 1);
  CMatrixN<Scalar, 2> m;
  m << cos(2 * theta), sin(2 * theta), sin(2 * theta), -cos(2 * theta);
  return i * m;
}

template <typename Scalar = double>
CMatrixN<Scalar, 2> qwp_matrix(Scalar theta) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const std::complex<Scalar> i(0, 1);
  CMatrixN<Scalar, 2> m;
  m << Scalar(1) + i * cos(2 * theta), i * sin(2 * theta), i * sin(2 * theta),
      Scalar(1) - i * cos(2 * theta);
  return m / sqrt(Scalar(2));
}

// One single-photon polarization gate as at most one phase shifter and a
// QWP-HWP-QWP sequence. Elements act in the order ps, qwp1, hwp, qwp2;
// absent elements are identity.
struct WaveplateChain {
  std::optional<double> ps_angle;
  std::optional<double> qwp1_angle;
  std::optional<double> hwp_angle;
  std::optional<double> qwp2_angle;

  int element_count() const {
    return static_cast<int>(ps_angle.has_value()) + static_cast<int>(qwp1_angle.has_value()) +
           static_cast<int>(hwp_angle.has_value()) + static_cast<int>(qwp2_angle.has_value());
  }
  bool empty() const { return element_count() == 0; }

  bool operator==(const WaveplateChain&) const = default;
};

Matrix2c chain_matrix(const WaveplateChain& chain);

enum class ChainForm {
  // Fewest elements: identity plates and zero phases are left out.
  kMinimal,
  // Always all four elements, the fixed template of the two-qubit layout.
  kFull,
};

/// Finds a chain whose matrix equals `u` exactly (the phase shifter carries
/// the global phase). Plate angles are reported in [0, π), the phase in
/// [0, 2π). Throws InvalidInput for a non-unitary or non-2×2 input.
WaveplateChain synthesize_u2(const ComplexMatrix& u, const ToleranceConfig& tol = {},
                             ChainForm form = ChainForm::kMinimal);

}  // namespace pcartan
