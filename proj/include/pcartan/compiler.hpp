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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcartan/cartan.hpp"
#include "pcartan/circuit.hpp"
#include "pcartan/simulator.hpp"

namespace pcartan {

inline constexpr std::string_view kCompilerVersion = "pcartan 1.0.0";

struct CompileOptions {
  DofConvention convention = DofConvention::kSpatialPolarization;
  // Off: every single-mode gate is a full PS-QWP-HWP-QWP chain (the fixed
  // 20-element layout). On: shortest chains, both central-angle placements
  // tried, then the peephole pass.
  bool optimize = false;
  bool verify = true;
  ToleranceConfig tolerances;
  // Realize the global phase too, so the circuit equals U exactly rather
  // than up to a phase. The phase is folded into the outermost left gates,
  // which costs no extra element.
  bool emit_global_phase_ps = false;

  void validate() const { tolerances.validate(); }
};

struct CompileResult {
  OpticalCircuit circuit;
  // Present when CompileOptions::verify is set. With emit_global_phase_ps
  // the distance is the plain max-entry distance (no phase freedom).
  std::optional<VerificationReport> report;
};

/// Two spatial modes. Layout in propagation order: R1 on a1, R2 on a2, PBS,
/// HWP on a1, HWP on a2, PBS, L1 on a1, L2 on a2.
CompileResult compile(const ComplexMatrix& u, const CompileOptions& opts = {});

/// Four spatial modes, spatial-polarization order only. Layout: right blocks
/// on (a1, a2) and (a3, a4), the central pair gadgets on (a1, a3) and
/// (a2, a4), left blocks on (a1, a2) and (a3, a4).
CompileResult compile_m4(const ComplexMatrix& u, const CompileOptions& opts = {});

enum class BuiltinTarget { kWalk, kQft };

/// "walk" or "qft"; throws InvalidInput otherwise.
BuiltinTarget parse_builtin_target(std::string_view name);
std::string_view to_string(BuiltinTarget t);

/// The two-dimensional quantum walk and the two-qubit Fourier transform.
/// The matrix does not depend on the convention, only its basis labels do.
Matrix4c builtin_target(BuiltinTarget t, DofConvention convention = DofConvention::kSpatialPolarization);

// Known factorizations of the built-in targets, stored as data. `factors` multiply (left
// to right) to the target; when the middle factor was further split, its
// pieces are in `central_factors` and multiply to factors[1].
struct ReferenceDecomposition {
  BuiltinTarget target = BuiltinTarget::kWalk;
  DofConvention convention = DofConvention::kPolarizationSpatial;
  std::vector<ComplexMatrix> factors;
  std::vector<ComplexMatrix> central_factors;
  int hand_count = 0;  // element count of a hand-optimized circuit
};

/// Keys: "walk_ps", "qft_ps", "walk_sp", "qft_sp".
std::map<std::string, ReferenceDecomposition> reference_decompositions();

}  // namespace pcartan
