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
#include <string>
#include <string_view>
#include <vector>

#include "pcartan/convention.hpp"
#include "pcartan/matrix.hpp"
#include "pcartan/waveplate.hpp"

namespace pcartan {

enum class ElementKind { kPbs, kHwp, kQwp, kPs };

std::string_view to_string(ElementKind k);

/// "pbs", "hwp", "qwp", "ps"; throws InvalidInput otherwise.
ElementKind parse_element_kind(std::string_view text);

// One optical element. Waveplates and phase shifters sit on `mode`; a PBS
// couples `mode` and `partner` by exchanging their H components.
struct OpticalElement {
  ElementKind kind = ElementKind::kPs;
  int mode = 0;
  int partner = -1;  // PBS only
  double angle = 0.0;  // unused for PBS

  static OpticalElement pbs(int a, int b) { return {ElementKind::kPbs, a, b, 0.0}; }
  static OpticalElement hwp(int m, double theta) { return {ElementKind::kHwp, m, -1, theta}; }
  static OpticalElement qwp(int m, double theta) { return {ElementKind::kQwp, m, -1, theta}; }
  static OpticalElement ps(int m, double theta) { return {ElementKind::kPs, m, -1, theta}; }

  bool is_pbs() const { return kind == ElementKind::kPbs; }
  bool touches(int m) const { return mode == m || (is_pbs() && partner == m); }

  bool operator==(const OpticalElement&) const = default;
};

/// 2×2 polarization matrix of a single-mode element; throws for a PBS.
Matrix2c local_matrix(const OpticalElement& e);

// Elements are listed in propagation order: elements.front() acts first.
struct OpticalCircuit {
  DofConvention convention = DofConvention::kSpatialPolarization;
  int num_spatial_modes = 2;
  std::vector<OpticalElement> elements;
  std::map<std::string, std::string> metadata;

  /// Throws InvalidInput when the mode count is not 2 or 4, an element sits
  /// on a mode out of range, a PBS does not couple two distinct modes, or an
  /// angle is not finite.
  void validate() const;

  /// Appends `chain` on `mode` in its own order (PS, QWP, HWP, QWP).
  void append_chain(int mode, const WaveplateChain& chain);

  bool operator==(const OpticalCircuit&) const = default;
};

struct CountReport {
  int total = 0;
  std::map<ElementKind, int> by_kind;
  // Baseline name → baseline count minus total. Only the baseline that
  // matches the circuit's (convention, modes) is present:
  //   ps_csd_swap = 25 (PS, 2 modes), sp_csd = 21 (SP, 2), m4_csd = 74 (SP, 4).
  std::map<std::string, int> baseline_comparisons;
  int bound = 0;  // 20 for two modes, 48 for four
};

inline constexpr int kBaselinePsCsdSwap = 25;
inline constexpr int kBaselineSpCsd = 21;
inline constexpr int kBaselineM4Csd = 74;
inline constexpr int kBoundTwoModes = 20;
inline constexpr int kBoundFourModes = 48;

CountReport element_count(const OpticalCircuit& c);

/// Peephole rewrite to a fixpoint. Two elements are adjacent on a mode when
/// no element between them touches that mode.
///   R1 drop a waveplate or PS whose matrix is the identity within tol;
///   R2 merge adjacent PSs on one mode;
///   R3 resynthesize each maximal single-mode run and keep the shorter chain;
///   R4 cancel adjacent PBS pairs on the same mode pair.
/// All rewrites are exact; the simulated matrix is unchanged.
OpticalCircuit optimize(const OpticalCircuit& c, const ToleranceConfig& tol = {});

// Wire format:
// {"version": 1, "convention": "ps"|"sp", "spatial_modes": n,
//  "elements": [{"kind": ..., "modes": [i] | [i, j], "angle_rad": x}],
//  "metadata": {...}}

std::string serialize(const OpticalCircuit& c, int indent = 2);

/// Throws InvalidInput with a description of the first schema violation.
OpticalCircuit deserialize(std::string_view text);

}  // namespace pcartan
