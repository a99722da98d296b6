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

#include "pcartan/waveplate.hpp"
#include "support.hpp"

namespace pcartan {
namespace {

using test::Gen;

Matrix2c hadamard() {
  Matrix2c h;
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

TEST_CASE("Phase shifter matrix") {
  CHECK(ps_matrix(0.0) == Matrix2c::Identity());
  CHECK(max_abs(ps_matrix(kPi) + Matrix2c::Identity()) < 1e-15);
  CHECK(max_abs(ps_matrix(kPi / 2) - kI * Matrix2c::Identity()) < 1e-15);
}

TEST_CASE("Half-wave plate matrix") {
  CHECK(max_abs(hwp_matrix(0.0) - kI * pauli::z()) < 1e-15);
  CHECK(max_abs(hwp_matrix(kPi / 4) - kI * pauli::x()) < 1e-15);
  CHECK(max_abs(hwp_matrix(kPi / 8) - kI * hadamard()) < 1e-15);
}

TEST_CASE("Quarter-wave plate matrix") {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2c q0;
  q0 << Complex(r, r), 0, 0, Complex(r, -r);
  CHECK(max_abs(qwp_matrix(0.0) - q0) < 1e-15);
  Matrix2c q45;
  q45 << 1, kI, kI, 1;
  CHECK(max_abs(qwp_matrix(kPi / 4) - q45 * r) < 1e-15);
}

TEST_CASE("Plate squaring identities") {
  Gen g(1);
  for (int k = 0; k < 100; ++k) {
    const double t = g.angle();
    CHECK(max_abs(qwp_matrix(t) * qwp_matrix(t) - hwp_matrix(t)) <= 1e-12);
    CHECK(max_abs(hwp_matrix(t) * hwp_matrix(t) + Matrix2c::Identity()) <= 1e-12);
    CHECK(is_unitary(qwp_matrix(t)));
  }
}

TEST_CASE("chain_matrix") {
  CHECK(chain_matrix(WaveplateChain{}) == Matrix2c::Identity());
  WaveplateChain phase;
  phase.ps_angle = kPi / 2;
  CHECK(max_abs(chain_matrix(phase) - kI * Matrix2c::Identity()) < 1e-15);
  Gen g(2);
  for (int k = 0; k < 20; ++k) {
    const double t = g.angle();
    WaveplateChain two_quarters;
    two_quarters.qwp1_angle = t;
    two_quarters.qwp2_angle = t;
    CHECK(max_abs(chain_matrix(two_quarters) - hwp_matrix(t)) <= 1e-12);
  }
  // PS, QWP, HWP, QWP in propagation order, so the last plate is leftmost.
  WaveplateChain full{0.1, 0.2, 0.3, 0.4};
  const Matrix2c expect = qwp_matrix(0.4) * hwp_matrix(0.3) * qwp_matrix(0.2) * ps_matrix(0.1);
  CHECK(max_abs(chain_matrix(full) - expect) < 1e-15);
  CHECK(full.element_count() == 4);
}

TEST_CASE("synthesize_u2 special inputs") {
  SECTION("identity is empty") {
    const WaveplateChain c = synthesize_u2(Matrix2c::Identity());
    CHECK(c.empty());
  }
  SECTION("i sigma_x is one half-wave plate") {
    const WaveplateChain c = synthesize_u2(kI * pauli::x());
    CHECK(c.element_count() == 1);
    REQUIRE(c.hwp_angle.has_value());
    CHECK(*c.hwp_angle == Catch::Approx(kPi / 4).margin(1e-12));
  }
  SECTION("pure phase is one phase shifter") {
    const WaveplateChain c = synthesize_u2(std::polar(1.0, 0.7) * Matrix2c::Identity());
    CHECK(c.element_count() == 1);
    REQUIRE(c.ps_angle.has_value());
    CHECK(*c.ps_angle == Catch::Approx(0.7).margin(1e-12));
  }
  SECTION("single plates are found") {
    for (double t : {0.1, 0.5, 1.0, 2.5}) {
      CHECK(synthesize_u2(hwp_matrix(t)).element_count() == 1);
      CHECK(synthesize_u2(qwp_matrix(t)).element_count() == 1);
    }
  }
  SECTION("rejects bad input") {
    CHECK_THROWS_AS(synthesize_u2(Matrix4c::Identity()), InvalidInput);
    CHECK_THROWS_AS(synthesize_u2(2.0 * Matrix2c::Identity()), InvalidInput);
  }
}

TEST_CASE("synthesize_u2 round trips exactly on Haar samples") {
  double worst_min = 0.0;
  double worst_full = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const ComplexMatrix u = haar_random_unitary(2, s);
    const WaveplateChain c = synthesize_u2(u);
    const WaveplateChain f = synthesize_u2(u, {}, ChainForm::kFull);
    worst_min = std::max(worst_min, max_abs(chain_matrix(c) - u));
    worst_full = std::max(worst_full, max_abs(chain_matrix(f) - u));
    REQUIRE(c.element_count() <= 4);
    REQUIRE(f.element_count() == 4);
    for (const auto& a : {c.qwp1_angle, c.hwp_angle, c.qwp2_angle}) {
      if (a) REQUIRE((*a >= 0.0 && *a < kPi));
    }
  }
  CHECK(worst_min <= 1e-10);
  CHECK(worst_full <= 1e-10);
}

TEST_CASE("synthesize_u2 on products of plates") {
  // Degenerate corners: products that collapse to fewer plates.
  Gen g(3);
  for (int k = 0; k < 200; ++k) {
    const double a = g.angle();
    const double b = g.angle();
    const Matrix2c u = hwp_matrix(a) * hwp_matrix(b);
    const WaveplateChain c = synthesize_u2(u);
    CHECK(max_abs(chain_matrix(c) - u) <= 1e-10);
    const Matrix2c v = qwp_matrix(a) * qwp_matrix(a);
    CHECK(max_abs(chain_matrix(synthesize_u2(v)) - v) <= 1e-10);
  }
}

}  // namespace
}  // namespace pcartan
