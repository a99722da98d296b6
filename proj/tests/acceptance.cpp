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

// Acceptance suite: one PASS/FAIL line per criterion. Run all criteria, or a
// single one with --criterion N.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pcartan/compiler.hpp"
#include "pcartan/lie_algebra.hpp"
#include "pcartan/waveplate.hpp"
#include "support.hpp"

namespace pcartan {
namespace {

constexpr DofConvention kPS = DofConvention::kPolarizationSpatial;
constexpr DofConvention kSP = DofConvention::kSpatialPolarization;

constexpr double kVerifyTol = 1e-9;
constexpr double kAngleTol = 1e-9;
constexpr double kFixtureTol = 1e-12;
constexpr double kChainTol = 1e-10;
constexpr double kPlateIdentityTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

CompileOptions options(DofConvention c, bool optimize) {
  CompileOptions o;
  o.convention = c;
  o.optimize = optimize;
  return o;
}

Outcome two_mode_bound() {
  Outcome r;
  std::ostringstream d;
  for (auto c : {kPS, kSP}) {
    for (bool opt : {false, true}) {
      int worst_count = 0;
      double worst_distance = 0.0;
      for (std::uint64_t s = 0; s < 1000; ++s) {
        const ComplexMatrix u = haar_random_unitary(4, s);
        const CompileResult res = compile(u, options(c, opt));
        worst_count = std::max(worst_count, static_cast<int>(res.circuit.elements.size()));
        worst_distance = std::max(worst_distance, phase_distance(simulate(res.circuit), u).distance);
      }
      r.pass = r.pass && worst_count <= kBoundTwoModes && worst_distance <= kVerifyTol;
      d << to_string(c) << (opt ? "/opt" : "/plain") << " max " << worst_count << " elements, "
        << fmt(worst_distance) << "; ";
    }
  }
  r.detail = d.str() + "1000 samples each, bound 20, tol 1e-9";
  return r;
}

Outcome four_mode_bound() {
  Outcome r;
  int worst_count = 0;
  double worst_distance = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ComplexMatrix u = haar_random_unitary(8, s);
    const CompileResult res = compile_m4(u, options(kSP, true));
    worst_count = std::max(worst_count, static_cast<int>(res.circuit.elements.size()));
    worst_distance = std::max(worst_distance, phase_distance(simulate(res.circuit), u).distance);
  }
  r.pass = worst_count <= kBoundFourModes && worst_distance <= kVerifyTol;
  r.detail = "max " + std::to_string(worst_count) + " elements (bound 48), distance " +
             fmt(worst_distance) + " (tol 1e-9), 200 samples";
  return r;
}

Outcome baseline_deltas() {
  Outcome r;
  std::ostringstream d;
  const auto check = [&](const ComplexMatrix& u, DofConvention c, bool four, const std::string& key,
                         int baseline, int bound) {
    const CompileResult res = four ? compile_m4(u, options(c, true)) : compile(u, options(c, false));
    const CountReport rep = element_count(res.circuit);
    const auto it = rep.baseline_comparisons.find(key);
    const bool ok = it != rep.baseline_comparisons.end() && rep.baseline_comparisons.size() == 1 &&
                    it->second == baseline - rep.total && rep.bound == bound &&
                    rep.total <= bound;
    r.pass = r.pass && ok;
    d << key << ": " << rep.total << " vs " << baseline << " (delta "
      << (it == rep.baseline_comparisons.end() ? 0 : it->second) << ", bound " << rep.bound
      << (ok ? ") ok; " : ") FAIL; ");
  };
  check(haar_random_unitary(4, 1), kPS, false, "ps_csd_swap", kBaselinePsCsdSwap, kBoundTwoModes);
  check(haar_random_unitary(4, 1), kSP, false, "sp_csd", kBaselineSpCsd, kBoundTwoModes);
  check(haar_random_unitary(8, 1), kSP, true, "m4_csd", kBaselineM4Csd, kBoundFourModes);
  r.detail = d.str();
  return r;
}

bool near_set(double a, double b, double x, double y) {
  const double direct = std::max(std::abs(a - x), std::abs(b - y));
  const double crossed = std::max(std::abs(a - y), std::abs(b - x));
  return std::min(direct, crossed) <= kAngleTol;
}

Outcome worked_angles() {
  const CartanFactors w = decompose(test::walk_matrix(), kPS);
  const CartanFactors f = decompose(test::qft_matrix(), kSP);
  Outcome r;
  r.pass = near_set(w.theta1, w.theta2, kPi / 2, 0.0) &&
           near_set(f.theta1, f.theta2, 3 * kPi / 8, kPi / 8);
  r.detail = "walk/ps {" + fmt(w.theta1) + ", " + fmt(w.theta2) + "}, qft/sp {" + fmt(f.theta1) +
             ", " + fmt(f.theta2) + "}, tol 1e-9";
  return r;
}

Outcome fixtures() {
  Outcome r;
  std::ostringstream d;
  for (const auto& [name, ref] : reference_decompositions()) {
    ComplexMatrix p = ComplexMatrix::Identity(4, 4);
    for (const auto& f : ref.factors) p = p * f;
    double err = max_abs(p - builtin_target(ref.target, ref.convention));
    if (!ref.central_factors.empty()) {
      ComplexMatrix q = ComplexMatrix::Identity(4, 4);
      for (const auto& f : ref.central_factors) q = q * f;
      err = std::max(err, max_abs(q - ref.factors[1]));
    }
    r.pass = r.pass && err <= kFixtureTol;
    d << name << " " << fmt(err) << "; ";
  }
  r.detail = d.str() + "tol 1e-12";
  return r;
}

Outcome lie_conditions() {
  Outcome r;
  std::ostringstream d;
  for (auto c : {kPS, kSP}) {
    for (int n = 1; n <= 3; ++n) {
      const CartanConditionReport rep = check_cartan_conditions(lie_span(n, c));
      r.pass = r.pass && rep.all();
      d << to_string(c) << n << (rep.all() ? " ok " : " FAIL ");
    }
  }
  r.detail = d.str();
  return r;
}

Outcome waveplates() {
  Outcome r;
  double worst = 0.0;
  bool shape = true;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const ComplexMatrix u = haar_random_unitary(2, s);
    const WaveplateChain c = synthesize_u2(u);
    worst = std::max(worst, max_abs(chain_matrix(c) - u));
    shape = shape && c.element_count() <= 4;
  }
  test::Gen g(2024);
  double identities = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = g.angle();
    identities = std::max(identities, max_abs(qwp_matrix(t) * qwp_matrix(t) - hwp_matrix(t)));
    identities = std::max(identities,
                          max_abs(hwp_matrix(t) * hwp_matrix(t) + Matrix2c::Identity()));
  }
  r.pass = shape && worst <= kChainTol && identities <= kPlateIdentityTol;
  r.detail = "round trip " + fmt(worst) + " (tol 1e-10), plate identities " + fmt(identities) +
             " (tol 1e-12)";
  return r;
}

// Inputs for the optimizer check. Generic samples compile to full chains the
// peephole rules cannot shorten, so most inputs are structured ones where
// they can.
ComplexMatrix safety_input(std::uint64_t s, test::Gen& g, bool four) {
  const ComplexMatrix h4 = haar_random_unitary(4, 10'000 + s);
  if (four) {
    return s % 2 ? haar_random_unitary(8, 10'000 + s)
                 : direct_sum(h4, haar_random_unitary(4, 20'000 + s));
  }
  switch (s % 5) {
    case 0:
      return h4;
    case 1:
      return central_A(g.angle(), g.angle(), s % 2 ? kPS : kSP);
    case 2:
      return kron(haar_random_unitary(2, s), haar_random_unitary(2, s + 1));
    case 3:
      return direct_sum(haar_random_unitary(2, s), haar_random_unitary(2, s + 1));
    default:
      return builtin_target(s % 2 ? BuiltinTarget::kWalk : BuiltinTarget::kQft);
  }
}

Outcome optimizer_safety() {
  Outcome r;
  int grew = 0;
  int shrank = 0;
  double worst = 0.0;
  test::Gen g(8);
  for (std::uint64_t s = 0; s < 500; ++s) {
    const bool four = s % 7 == 6;
    const DofConvention c = (four || s % 2) ? kSP : kPS;
    const ComplexMatrix u = safety_input(s, g, four);
    const OpticalCircuit plain =
        four ? compile_m4(u, options(c, false)).circuit : compile(u, options(c, false)).circuit;
    const OpticalCircuit opt = optimize(plain);
    if (opt.elements.size() > plain.elements.size()) ++grew;
    if (opt.elements.size() < plain.elements.size()) ++shrank;
    worst = std::max(worst, phase_distance(simulate(opt), simulate(plain)).distance);
  }
  r.pass = grew == 0 && worst <= kVerifyTol;
  std::ostringstream d;
  d << "500 circuits, " << shrank << " shrank, " << grew << " grew, max shift " << fmt(worst) << " (tol 1e-9); hand counts:";
  const auto refs = reference_decompositions();
  for (auto c : {kPS, kSP}) {
    for (auto t : {BuiltinTarget::kWalk, BuiltinTarget::kQft}) {
      const std::string key = std::string(to_string(t)) + "_" + std::string(to_string(c));
      const CompileResult res = compile(builtin_target(t, c), options(c, true));
      d << " " << key << " " << res.circuit.elements.size() << " vs " << refs.at(key).hand_count;
    }
  }
  r.detail = d.str();
  return r;
}

}  // namespace
}  // namespace pcartan

int main(int argc, char** argv) {
  using pcartan::Outcome;
  const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria = {
      {1, {"dim-4 element bound and verification", pcartan::two_mode_bound}},
      {2, {"dim-8 element bound and verification", pcartan::four_mode_bound}},
      {3, {"baseline deltas in count reports", pcartan::baseline_deltas}},
      {4, {"worked-example central angles", pcartan::worked_angles}},
      {5, {"reference factorizations multiply out", pcartan::fixtures}},
      {6, {"Cartan conditions on all spans", pcartan::lie_conditions}},
      {7, {"waveplate synthesis and plate identities", pcartan::waveplates}},
      {8, {"optimizer safety", pcartan::optimizer_safety}},
  };

  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& [id, entry] : criteria) {
    if (only != 0 && id != only) continue;
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << entry.first << " | "
              << o.detail << std::endl;
  }
  return all_pass ? 0 : 1;
}
