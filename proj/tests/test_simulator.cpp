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

#include <catch2/catch_amalgamated.hpp>

#include "pcartan/compiler.hpp"
#include "pcartan/simulator.hpp"
#include "support.hpp"

namespace pcartan {
namespace {

using test::Gen;
constexpr DofConvention kPS = DofConvention::kPolarizationSpatial;
constexpr DofConvention kSP = DofConvention::kSpatialPolarization;

// Basis index written out from the two orderings, independently of the
// library's own helper.
int index_of(DofConvention c, int m, int mode, int pol) {
  return c == kPS ? pol * m + mode : 2 * mode + pol;
}

// Element action built entry by entry from its physical description.
ComplexMatrix oracle_unitary(const OpticalElement& e, DofConvention c, int m) {
  ComplexMatrix u = ComplexMatrix::Identity(2 * m, 2 * m);
  if (e.is_pbs()) {
    const int h1 = index_of(c, m, e.mode, 0);
    const int h2 = index_of(c, m, e.partner, 0);
    u(h1, h1) = 0.0;
    u(h2, h2) = 0.0;
    u(h1, h2) = 1.0;
    u(h2, h1) = 1.0;
    return u;
  }
  const Matrix2c local = local_matrix(e);
  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      u(index_of(c, m, e.mode, p), index_of(c, m, e.mode, q)) = local(p, q);
    }
  }
  return u;
}

TEST_CASE("Element embeddings") {
  SECTION("PBS on two modes, polarization-spatial order") {
    ComplexMatrix expect = ComplexMatrix::Identity(4, 4);
    expect.topLeftCorner(2, 2) = pauli::x();
    CHECK(element_unitary(OpticalElement::pbs(0, 1), kPS, 2) == expect);
  }
  SECTION("HWP on a1, polarization-spatial order") {
    const double t = 0.37;
    const ComplexMatrix u = element_unitary(OpticalElement::hwp(0, t / 2), kPS, 2);
    CHECK(std::abs(u(0, 0) - kI * std::cos(t)) < 1e-15);
    CHECK(std::abs(u(0, 2) - kI * std::sin(t)) < 1e-15);
    CHECK(std::abs(u(2, 0) - kI * std::sin(t)) < 1e-15);
    CHECK(std::abs(u(2, 2) + kI * std::cos(t)) < 1e-15);
    CHECK(u(1, 1) == Complex(1.0));
    CHECK(u(3, 3) == Complex(1.0));
  }
  SECTION("PS on a2") {
    const double phi = 0.8;
    const Complex e = std::polar(1.0, phi);
    const ComplexMatrix expect = Eigen::Vector4cd(1.0, e, 1.0, e).asDiagonal();
    CHECK(max_abs(element_unitary(OpticalElement::ps(1, phi), kPS, 2) - expect) < 1e-15);
  }
  SECTION("agree with the entrywise oracle") {
    Gen g(12);
    for (int k = 0; k < 300; ++k) {
      const int m = k % 2 ? 2 : 4;
      const DofConvention c = k % 3 ? kSP : kPS;
      const OpticalElement e = g.element(m);
      const ComplexMatrix u = element_unitary(e, c, m);
      REQUIRE(max_abs(u - oracle_unitary(e, c, m)) < 1e-15);
      REQUIRE(unitarity_residual(u) <= 1e-12);
    }
  }
  SECTION("PBS squares to the identity exactly") {
    for (auto c : {kPS, kSP}) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          const ComplexMatrix p = element_unitary(OpticalElement::pbs(a, b), c, 4);
          CHECK(p * p == ComplexMatrix::Identity(8, 8));
        }
      }
    }
  }
  SECTION("out of range modes") {
    CHECK_THROWS_AS(element_unitary(OpticalElement::hwp(2, 0.1), kSP, 2), InvalidInput);
    CHECK_THROWS_AS(element_unitary(OpticalElement::pbs(0, 5), kSP, 4), InvalidInput);
    CHECK_THROWS_AS(element_unitary(OpticalElement::pbs(1, 1), kSP, 4), InvalidInput);
  }
}

TEST_CASE("simulate") {
  OpticalCircuit empty;
  CHECK(simulate(empty) == ComplexMatrix::Identity(4, 4));
  empty.num_spatial_modes = 4;
  CHECK(simulate(empty) == ComplexMatrix::Identity(8, 8));

  SECTION("central sandwich") {
    for (auto c : {kPS, kSP}) {
      OpticalCircuit k;
      k.convention = c;
      k.elements = {OpticalElement::pbs(0, 1), OpticalElement::hwp(0, kPi / 4),
                    OpticalElement::hwp(1, 0.0), OpticalElement::pbs(0, 1)};
      CHECK(max_abs(simulate(k) - optical_core(kPi / 4, 0.0, c)) < 1e-15);
    }
  }
  SECTION("first element is rightmost") {
    OpticalCircuit k;
    k.elements = {OpticalElement::qwp(0, 0.2), OpticalElement::pbs(0, 1)};
    const ComplexMatrix expect = element_unitary(k.elements[1], kSP, 2) *
                                 element_unitary(k.elements[0], kSP, 2);
    CHECK(max_abs(simulate(k) - expect) == 0.0);
  }
}

TEST_CASE("simulate is a homomorphism from concatenation to products") {
  Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = trial % 2 ? 2 : 4;
    const DofConvention c = trial % 4 < 2 ? kPS : kSP;
    const OpticalCircuit a = g.circuit(c, m, g.below(12));
    const OpticalCircuit b = g.circuit(c, m, g.below(12));
    OpticalCircuit ab = a;
    ab.elements.insert(ab.elements.end(), b.elements.begin(), b.elements.end());
    REQUIRE(max_abs(simulate(ab) - simulate(b) * simulate(a)) <= 1e-12);
  }
}

TEST_CASE("Elements on disjoint modes commute") {
  Gen g(31);
  int swaps = 0;
  for (int trial = 0; trial < 200; ++trial) {
    OpticalCircuit c = g.circuit(trial % 2 ? kPS : kSP, 4, 2 + g.below(15));
    const ComplexMatrix before = simulate(c);
    for (std::size_t k = 0; k + 1 < c.elements.size(); ++k) {
      const OpticalElement& x = c.elements[k];
      const OpticalElement& y = c.elements[k + 1];
      const bool disjoint = !x.touches(y.mode) && !(y.is_pbs() && x.touches(y.partner));
      if (!disjoint) continue;
      std::swap(c.elements[k], c.elements[k + 1]);
      ++swaps;
      REQUIRE(max_abs(simulate(c) - before) <= 1e-12);
    }
  }
  CHECK(swaps > 100);
}

TEST_CASE("verify") {
  SECTION("empty circuit against identity") {
    const VerificationReport r = verify(OpticalCircuit{}, Matrix4c::Identity());
    CHECK(r.passed);
    CHECK(r.distance == 0.0);
    CHECK(r.element_total == 0);
  }
  SECTION("compiled walk against walk and against the Fourier transform") {
    const CompileResult w = compile(test::walk_matrix());
    const VerificationReport good = verify(w.circuit, test::walk_matrix());
    CHECK(good.passed);
    CHECK(good.element_total == static_cast<int>(w.circuit.elements.size()));
    const VerificationReport bad = verify(w.circuit, test::qft_matrix());
    CHECK_FALSE(bad.passed);
    CHECK(bad.distance > 0.3);
    CHECK(phase_distance(test::walk_matrix(), test::qft_matrix()).distance > 0.3);
  }
  SECTION("report matches phase_distance") {
    Gen g(2);
    const OpticalCircuit c = g.circuit(kPS, 2, 10);
    const ComplexMatrix u = haar_random_unitary(4, 5);
    const VerificationReport r = verify(c, u);
    const PhaseDistance d = phase_distance(simulate(c), u);
    CHECK(r.distance == d.distance);
    CHECK(r.global_phase == d.phase);
    CHECK(r.passed == (r.distance <= 1e-9));
  }
  SECTION("tolerance decides") {
    const ComplexMatrix u = simulate(OpticalCircuit{}) * std::polar(1.0, 1e-7);
    ComplexMatrix v = u;
    v(0, 0) *= std::polar(1.0, 1e-7);
    CHECK_FALSE(verify(OpticalCircuit{}, v).passed);
    CHECK(verify(OpticalCircuit{}, v, ToleranceConfig::with_equivalence(1e-6)).passed);
  }
  SECTION("dimension mismatch") {
    CHECK_THROWS_AS(verify(OpticalCircuit{}, Matrix8c::Identity()), InvalidInput);
  }
}

}  // namespace
}  // namespace pcartan
