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

#include "pcartan/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "pcartan/matrix_io.hpp"
#include "pcartan/waveplate.hpp"

namespace pcartan {

namespace {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// FNV-1a over the compact JSON of the source matrix.
std::string source_hash(const ComplexMatrix& u) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : matrix_to_json(u, -1)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// A scalar moved from the right gates to the left ones leaves the block
// unchanged, and so does any scalar on the left gates when the global phase
// is free. A chain needs a PS only when its gate has det ≠ 1, so spend the
// freedom on making det R1 = 1 and, phase permitting, det L1 = 1.
void normalize_phases(std::array<Matrix2c, 2>& left, std::array<Matrix2c, 2>& right,
                      double global_phase, bool exact) {
  const Complex shift = std::polar(1.0, 0.5 * std::arg(right[0].determinant()));
  for (auto& g : right) g /= shift;
  for (auto& g : left) g *= shift;
  const Complex extra = exact ? std::polar(1.0, global_phase)
                              : std::polar(1.0, -0.5 * std::arg(left[0].determinant()));
  for (auto& g : left) g *= extra;
}

// Elements of one two-mode block on modes (a, b). With `exact` the global
// phase is realized too.
std::vector<OpticalElement> two_mode_layout(const OpticalFactors& o, int a, int b, bool exact,
                                            ChainForm form, const ToleranceConfig& tol) {
  std::array<Matrix2c, 2> left = o.left_gates;
  std::array<Matrix2c, 2> right = o.right_gates;
  normalize_phases(left, right, o.global_phase, exact);
  OpticalCircuit c;
  c.num_spatial_modes = 4;
  c.append_chain(a, synthesize_u2(right[0], tol, form));
  c.append_chain(b, synthesize_u2(right[1], tol, form));
  c.elements.push_back(OpticalElement::pbs(a, b));
  c.elements.push_back(OpticalElement::hwp(a, wrap_angle(o.hwp_angles[0], kPi)));
  c.elements.push_back(OpticalElement::hwp(b, wrap_angle(o.hwp_angles[1], kPi)));
  c.elements.push_back(OpticalElement::pbs(a, b));
  c.append_chain(a, synthesize_u2(left[0], tol, form));
  c.append_chain(b, synthesize_u2(left[1], tol, form));
  return c.elements;
}

// Both central angles vanish: the block is L1·R1 ⊕ L2·R2, no PBS needed.
std::vector<OpticalElement> local_layout(const CartanFactors& f, int a, int b, bool exact,
                                         const ToleranceConfig& tol) {
  std::array<Matrix2c, 2> left = {f.left_gates[0] * f.right_gates[0],
                                  f.left_gates[1] * f.right_gates[1]};
  std::array<Matrix2c, 2> right = {Matrix2c::Identity(), Matrix2c::Identity()};
  normalize_phases(left, right, f.global_phase, exact);
  OpticalCircuit c;
  c.num_spatial_modes = 4;
  c.append_chain(a, synthesize_u2(left[0], tol));
  c.append_chain(b, synthesize_u2(left[1], tol));
  return c.elements;
}

struct BlockPlan {
  CartanFactors factors;
  std::vector<OpticalElement> elements;
};

// Compiles a 4×4 block on modes (a, b) of a circuit with `num_modes` modes.
// Optimizing tries both central-angle placements and keeps the shorter.
BlockPlan compile_block(const ComplexMatrix& u, DofConvention convention, int a, int b,
                        int num_modes, bool fold_phase, bool optimize_block,
                        const ToleranceConfig& tol) {
  std::vector<AnglePlacement> placements = {AnglePlacement::kLargerOnA1};
  if (optimize_block) placements.push_back(AnglePlacement::kLargerOnA2);

  std::optional<BlockPlan> best;
  for (AnglePlacement placement : placements) {
    BlockPlan plan;
    plan.factors = decompose(u, convention, tol, placement);
    OpticalCircuit c;
    c.convention = convention;
    c.num_spatial_modes = num_modes;
    const bool uncoupled = std::max(plan.factors.theta1, plan.factors.theta2) <= tol.angle_tol;
    if (optimize_block && uncoupled) {
      c.elements = local_layout(plan.factors, a, b, fold_phase, tol);
    } else {
      c.elements = two_mode_layout(absorb_bookends(plan.factors), a, b, fold_phase,
                                   optimize_block ? ChainForm::kMinimal : ChainForm::kFull, tol);
    }
    if (optimize_block) c = optimize(c, tol);
    plan.elements = std::move(c.elements);
    if (!best || plan.elements.size() < best->elements.size()) best = std::move(plan);
  }
  return std::move(*best);
}

std::optional<VerificationReport> maybe_verify(const OpticalCircuit& c, const ComplexMatrix& u,
                                               const CompileOptions& opts) {
  if (!opts.verify) return std::nullopt;
  VerificationReport r = verify(c, u, opts.tolerances);
  if (opts.emit_global_phase_ps) {
    r.distance = max_abs(simulate(c) - u);
    r.global_phase = 0.0;
    r.passed = r.distance <= opts.tolerances.equivalence_tol;
  }
  return r;
}

void stamp_common(OpticalCircuit& c, const ComplexMatrix& u, const CompileOptions& opts,
                  double global_phase) {
  c.metadata["compiler"] = std::string(kCompilerVersion);
  c.metadata["source_fnv1a"] = source_hash(u);
  c.metadata["optimized"] = opts.optimize ? "true" : "false";
  c.metadata["global_phase_rad"] = format_real(global_phase);
  c.metadata["global_phase"] = opts.emit_global_phase_ps ? "realized" : "omitted";
}

}  // namespace

CompileResult compile(const ComplexMatrix& u, const CompileOptions& opts) {
  opts.validate();
  const ToleranceConfig& tol = opts.tolerances;
  BlockPlan plan = compile_block(u, opts.convention, 0, 1, 2, opts.emit_global_phase_ps,
                                 opts.optimize, tol);

  CompileResult result;
  OpticalCircuit& c = result.circuit;
  c.convention = opts.convention;
  c.num_spatial_modes = 2;
  c.elements = std::move(plan.elements);
  stamp_common(c, u, opts, plan.factors.global_phase);
  c.metadata["theta1"] = format_real(plan.factors.theta1);
  c.metadata["theta2"] = format_real(plan.factors.theta2);
  result.report = maybe_verify(c, u, opts);
  return result;
}

CompileResult compile_m4(const ComplexMatrix& u, const CompileOptions& opts) {
  opts.validate();
  if (opts.convention != DofConvention::kSpatialPolarization) {
    throw InvalidInput("compile_m4: only the spatial-polarization convention is supported");
  }
  const ToleranceConfig& tol = opts.tolerances;
  RecursiveFactors f = decompose_m4(u, tol);

  CompileResult result;
  OpticalCircuit& c = result.circuit;
  c.convention = DofConvention::kSpatialPolarization;
  c.num_spatial_modes = 4;
  auto append = [&](const ComplexMatrix& block, int a, int b) {
    // Relative phases between blocks matter, so every block is exact.
    BlockPlan plan = compile_block(block, DofConvention::kSpatialPolarization, a, b, 4,
                                   /*fold_phase=*/true, opts.optimize, tol);
    c.elements.insert(c.elements.end(), plan.elements.begin(), plan.elements.end());
  };

  const Complex phase = opts.emit_global_phase_ps ? std::polar(1.0, f.global_phase) : Complex(1.0);
  if (!f.pair_active[0] && !f.pair_active[1]) {
    // No coupling between (a1, a2) and (a3, a4): one block per side.
    append(phase * f.left_top * f.right_top, 0, 1);
    append(phase * f.left_bottom * f.right_bottom, 2, 3);
  } else {
    append(f.right_top, 0, 1);
    append(f.right_bottom, 2, 3);
    for (int p = 0; p < 2; ++p) {
      if (!f.pair_active[static_cast<std::size_t>(p)]) continue;
      const int i = p, j = p + 2;
      c.elements.push_back(OpticalElement::pbs(i, j));
      c.elements.push_back(
          OpticalElement::hwp(i, wrap_angle(0.5 * f.angles[static_cast<std::size_t>(2 * p)], kPi)));
      c.elements.push_back(OpticalElement::hwp(
          j, wrap_angle(0.5 * f.angles[static_cast<std::size_t>(2 * p + 1)], kPi)));
      c.elements.push_back(OpticalElement::pbs(i, j));
    }
    append(phase * f.left_top, 0, 1);
    append(phase * f.left_bottom, 2, 3);
  }
  if (opts.optimize) c = optimize(c, tol);

  stamp_common(c, u, opts, f.global_phase);
  for (int k = 0; k < 4; ++k) {
    c.metadata["angle" + std::to_string(k)] = format_real(f.angles[static_cast<std::size_t>(k)]);
  }
  result.report = maybe_verify(c, u, opts);
  return result;
}

BuiltinTarget parse_builtin_target(std::string_view name) {
  if (name == "walk") return BuiltinTarget::kWalk;
  if (name == "qft") return BuiltinTarget::kQft;
  throw InvalidInput("unknown target '" + std::string(name) + "' (expected walk or qft)");
}

std::string_view to_string(BuiltinTarget t) { return t == BuiltinTarget::kWalk ? "walk" : "qft"; }

Matrix4c builtin_target(BuiltinTarget t, DofConvention) {
  Matrix4c m;
  if (t == BuiltinTarget::kWalk) {
    m << -1, 1, 1, 1,
          1, -1, 1, 1,
          1, 1, -1, 1,
          1, 1, 1, -1;
  } else {
    m << 1, 1, 1, 1,
         1, kI, -1, -kI,
         1, -1, 1, -1,
         1, -kI, -1, kI;
  }
  return m / 2.0;
}

namespace {

Matrix4c rows4(std::initializer_list<Complex> v) {
  Matrix4c m;
  auto it = v.begin();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  }
  return m;
}

// PBS written out as the permutation matrix of the text, in either order.
Matrix4c pbs_ps_written() { return rows4({0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}); }
Matrix4c pbs_sp_written() { return rows4({0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}); }
Matrix4c phase_sp_written() { return rows4({-kI, 0, 0, 0, 0, kI, 0, 0, 0, 0, -kI, 0, 0, 0, 0, kI}); }

}  // namespace

std::map<std::string, ReferenceDecomposition> reference_decompositions() {
  const Complex i = kI;
  const double c8 = std::cos(kPi / 8.0), s8 = std::sin(kPi / 8.0);
  const double c38 = std::cos(3.0 * kPi / 8.0), s38 = std::sin(3.0 * kPi / 8.0);
  const double r2 = std::sqrt(2.0);
  std::map<std::string, ReferenceDecomposition> out;

  const Matrix4c a_w = rows4({i, 0, 0, 0, 0, 0, i, 0, 0, i, 0, 0, 0, 0, 0, -i});

  ReferenceDecomposition walk_ps;
  walk_ps.target = BuiltinTarget::kWalk;
  walk_ps.convention = DofConvention::kPolarizationSpatial;
  walk_ps.factors = {
      rows4({-1, 0, -1, 0, 0, -1, 0, -1, 1, 0, -1, 0, 0, -1, 0, 1}),
      a_w,
      (i / 2.0) * rows4({-1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, -1}),
  };
  walk_ps.central_factors = {
      pbs_ps_written(),
      rows4({0, 0, i, 0, 0, i, 0, 0, i, 0, 0, 0, 0, 0, 0, -i}),
      pbs_ps_written(),
  };
  walk_ps.hand_count = 11;
  out["walk_ps"] = walk_ps;

  ReferenceDecomposition qft_ps;
  qft_ps.target = BuiltinTarget::kQft;
  qft_ps.convention = DofConvention::kPolarizationSpatial;
  qft_ps.factors = {
      rows4({-1, 0, -1, 0, 0, -1, 0, -1, -1, 0, 1, 0, 0, -1, 0, 1}),
      a_w,
      (i / 2.0) * rows4({1, 0, 1, 0, 0, 1, 0, 1, 1, 0, -1, 0, 0, -i, 0, i}),
  };
  qft_ps.hand_count = 12;
  out["qft_ps"] = qft_ps;

  ReferenceDecomposition walk_sp;
  walk_sp.target = BuiltinTarget::kWalk;
  walk_sp.convention = DofConvention::kSpatialPolarization;
  walk_sp.factors = {
      rows4({-1, -1, 0, 0, 1, -1, 0, 0, 0, 0, -1, -1, 0, 0, -1, 1}),
      rows4({1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1}),
      0.5 * rows4({1, -1, 0, 0, -1, -1, 0, 0, 0, 0, 1, 1, 0, 0, 1, -1}),
  };
  walk_sp.central_factors = {
      phase_sp_written(),
      pbs_sp_written(),
      rows4({0, i, 0, 0, i, 0, 0, 0, 0, 0, i, 0, 0, 0, 0, -i}),
      pbs_sp_written(),
  };
  walk_sp.hand_count = 12;
  out["walk_sp"] = walk_sp;

  ReferenceDecomposition qft_sp;
  qft_sp.target = BuiltinTarget::kQft;
  qft_sp.convention = DofConvention::kSpatialPolarization;
  Matrix4c left = Matrix4c::Zero();
  left.topLeftCorner<2, 2>() << i * s8 - c8, -s8 - i * c8,
                                c8 + i * s8, s8 - i * c8;
  left.bottomRightCorner<2, 2>() << c8 - i * s8, -s8 - i * c8,
                                    -c8 - i * s8, s8 - i * c8;
  const Complex m1 = (i - 1.0) / r2, p1 = (i + 1.0) / r2;
  qft_sp.factors = {
      left,
      rows4({c38, 0, 0, s38, 0, c8, -s8, 0, 0, s8, c8, 0, -s38, 0, 0, c38}),
      0.5 * rows4({-i, m1, 0, 0, i, m1, 0, 0, 0, 0, 1, -p1, 0, 0, -1, -p1}),
  };
  qft_sp.central_factors = {
      phase_sp_written(),
      pbs_sp_written(),
      rows4({i * c8, i * s8, 0, 0, i * s8, -i * c8, 0, 0,
             0, 0, i * c38, i * s38, 0, 0, i * s38, -i * c38}),
      pbs_sp_written(),
  };
  qft_sp.hand_count = 19;
  out["qft_sp"] = qft_sp;
  return out;
}

}  // namespace pcartan
