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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "pcartan/circuit.hpp"
#include "pcartan/matrix.hpp"

namespace pcartan::test {

inline Matrix4c walk_matrix() {
  Matrix4c u;
  u << -1, 1, 1, 1,  //
      1, -1, 1, 1,   //
      1, 1, -1, 1,   //
      1, 1, 1, -1;
  return u / 2.0;
}

inline Matrix4c qft_matrix() {
  Matrix4c u;
  u << 1, 1, 1, 1,        //
      1, kI, -1.0, -kI,   //
      1, -1, 1, -1,       //
      1, -kI, -1.0, kI;
  return u / 2.0;
}

// exp(iH) for Hermitian H through its eigendecomposition.
inline ComplexMatrix expm_i_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, w(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Best max-entry distance over a grid of global phases.
inline double grid_phase_distance(const ComplexMatrix& a, const ComplexMatrix& b,
                                  int steps = 20000) {
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < steps; ++k) {
    const double phi = 2.0 * kPi * k / steps;
    best = std::min(best, max_abs(std::polar(1.0, phi) * a - b));
  }
  return best;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double angle() { return std::uniform_real_distribution<double>(-kPi, kPi)(rng_); }
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::uint64_t seed() { return rng_(); }

  OpticalElement element(int num_modes) {
    const int m = below(num_modes);
    switch (below(4)) {
      case 0: {
        int p = below(num_modes - 1);
        if (p >= m) ++p;
        return OpticalElement::pbs(m, p);
      }
      case 1:
        return OpticalElement::hwp(m, angle());
      case 2:
        return OpticalElement::qwp(m, angle());
      default:
        return OpticalElement::ps(m, angle());
    }
  }

  // Random circuits biased towards the patterns the optimizer rewrites:
  // repeated PBS pairs, zero-angle plates and runs on one mode.
  OpticalCircuit circuit(DofConvention convention, int num_modes, int length) {
    OpticalCircuit c;
    c.convention = convention;
    c.num_spatial_modes = num_modes;
    while (static_cast<int>(c.elements.size()) < length) {
      OpticalElement e = element(num_modes);
      const int r = below(6);
      if (r == 0 && !e.is_pbs()) e.angle = 0.0;
      c.elements.push_back(e);
      if (r == 1) c.elements.push_back(e);
    }
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pcartan::test
