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

#include "pcartan/waveplate.hpp"

#include <array>
#include <string>
#include <vector>

namespace pcartan {

Matrix2c chain_matrix(const WaveplateChain& chain) {
  Matrix2c m = Matrix2c::Identity();
  if (chain.ps_angle) m = ps_matrix(*chain.ps_angle) * m;
  if (chain.qwp1_angle) m = qwp_matrix(*chain.qwp1_angle) * m;
  if (chain.hwp_angle) m = hwp_matrix(*chain.hwp_angle) * m;
  if (chain.qwp2_angle) m = qwp_matrix(*chain.qwp2_angle) * m;
  return m;
}

namespace {

// Coefficients of M = m0·I + i(mx·σx + my·σy + mz·σz).
struct PauliCoeffs {
  double m0, mx, my, mz;

  PauliCoeffs scaled(double s) const { return {s * m0, s * mx, s * my, s * mz}; }
};

PauliCoeffs pauli_coeffs(const Matrix2c& v) {
  return {0.5 * (v(0, 0) + v(1, 1)).real(), 0.5 * (v(0, 1) + v(1, 0)).imag(),
          0.5 * (v(0, 1) - v(1, 0)).real(), 0.5 * (v(0, 0) - v(1, 1)).imag()};
}

using Plates = std::array<std::optional<double>, 3>;  // qwp1, hwp, qwp2

// Each solver returns plate angles whose product is ±m; callers verify.
Plates solve_hwp(const PauliCoeffs& m) {
  return {std::nullopt, 0.5 * std::atan2(m.mx, m.mz), std::nullopt};
}

Plates solve_qwp(const PauliCoeffs& m) {
  return {0.5 * std::atan2(m.mx, m.mz), std::nullopt, std::nullopt};
}

// QWP(q1) then HWP(h): m0 = -cos2δ/√2, my = sin2δ/√2 with δ = h - q1.
Plates solve_qwp_hwp(const PauliCoeffs& m) {
  const double h = 0.5 * std::atan2(m.mx, m.mz);
  const double delta = 0.5 * std::atan2(m.my, -m.m0);
  return {h - delta, h, std::nullopt};
}

// HWP(h) then QWP(q2): same coefficients with δ = q2 - h.
Plates solve_hwp_qwp(const PauliCoeffs& m) {
  const double h = 0.5 * std::atan2(m.mx, m.mz);
  const double delta = 0.5 * std::atan2(m.my, -m.m0);
  return {std::nullopt, h, h + delta};
}

// QWP(q1) then QWP(q2): m0 = sin²δ, my = sinδ·cosδ and
// (mx, mz) = cosδ·(sin(q1+q2), cos(q1+q2)) with δ = q2 - q1.
Plates solve_qwp_qwp(const PauliCoeffs& m) {
  const double cos_d = std::hypot(m.mx, m.mz);
  const double sin_d = std::copysign(std::sqrt(std::max(m.m0, 0.0)), m.my);
  const double delta = std::atan2(sin_d, cos_d);
  const double sum = cos_d > 0.0 ? std::atan2(m.mx, m.mz) : 0.0;
  return {0.5 * (sum - delta), std::nullopt, 0.5 * (sum + delta)};
}

// QWP(q1) HWP(h) QWP(q2) equals -Y(q2)·X(2h - q1 - q2)·Y(-q1) with
// Y(a) = exp(-iaσy), X(b) = exp(-ibσx); read off the Y-X-Y Euler angles.
Plates solve_general(const PauliCoeffs& m) {
  const double w0 = -m.m0, wx = m.mx, wy = m.my, wz = m.mz;
  const Complex cos_part(w0, wy);
  const Complex sin_part(wx, -wz);
  const double b = std::atan2(std::abs(sin_part), std::abs(cos_part));
  const double sum = std::abs(cos_part) > 0.0 ? std::arg(cos_part) : 0.0;
  const double diff = std::abs(sin_part) > 0.0 ? std::arg(sin_part) : 0.0;
  const double a = 0.5 * (sum + diff);
  const double c = 0.5 * (sum - diff);
  const double q2 = a;
  const double q1 = -c;
  const double h = 0.5 * (b + q1 + q2);
  return {q1, h, q2};
}

struct Candidate {
  WaveplateChain chain;
  double error = 0.0;
};

Candidate realize(const Plates& plates, const Matrix2c& u, const ToleranceConfig& tol,
                  bool force_ps) {
  WaveplateChain chain;
  if (plates[0]) chain.qwp1_angle = wrap_angle(*plates[0], kPi);
  if (plates[1]) chain.hwp_angle = wrap_angle(*plates[1], kPi);
  if (plates[2]) chain.qwp2_angle = wrap_angle(*plates[2], kPi);
  const PhaseDistance pd = phase_distance(chain_matrix(chain), u);
  const double phase = wrap_angle(pd.phase, 2.0 * kPi, -kPi);
  if (force_ps || std::abs(phase) > tol.angle_tol) chain.ps_angle = wrap_angle(phase);
  return {chain, max_abs(chain_matrix(chain) - u)};
}

}  // namespace

WaveplateChain synthesize_u2(const ComplexMatrix& u_in, const ToleranceConfig& tol,
                             ChainForm form) {
  if (u_in.rows() != 2 || u_in.cols() != 2) {
    throw InvalidInput("synthesize_u2: expected a 2x2 matrix, got " +
                       std::to_string(u_in.rows()) + "x" + std::to_string(u_in.cols()));
  }
  const double residual = unitarity_residual(u_in);
  if (residual > tol.unitarity_tol) {
    throw InvalidInput("synthesize_u2: input is not unitary (residual " +
                       std::to_string(residual) + ")");
  }
  const Matrix2c u = u_in;
  const Matrix2c v = std::polar(1.0, -0.5 * std::arg(u.determinant())) * u;
  const PauliCoeffs base = pauli_coeffs(v);

  if (form == ChainForm::kFull) {
    const Candidate c = realize(solve_general(base), u, tol, /*force_ps=*/true);
    if (c.error > tol.equivalence_tol) {
      throw NumericalFailure("synthesize_u2: chain error " + std::to_string(c.error));
    }
    return c.chain;
  }

  using Solver = Plates (*)(const PauliCoeffs&);
  static constexpr std::array<Solver, 6> kReduced = {
      solve_hwp, solve_qwp, solve_qwp_hwp, solve_hwp_qwp, solve_qwp_qwp, solve_general};

  std::optional<Candidate> best;
  auto consider = [&](const Candidate& c) {
    if (!best || c.chain.element_count() < best->chain.element_count()) best = c;
  };
  // Scalar input: at most a phase shifter.
  consider(realize({}, u, tol, false));
  if (best->error > tol.angle_tol) best.reset();
  for (Solver solve : kReduced) {
    for (double sign : {1.0, -1.0}) {
      const Candidate c = realize(solve(base.scaled(sign)), u, tol, false);
      if (c.error <= tol.angle_tol) consider(c);
    }
  }
  if (!best) {
    // Rounding pushed every candidate past angle_tol; keep the general
    // solution if it is still within the equivalence tolerance.
    const Candidate c = realize(solve_general(base), u, tol, false);
    if (c.error > tol.equivalence_tol) {
      throw NumericalFailure("synthesize_u2: chain error " + std::to_string(c.error));
    }
    best = c;
  }
  return best->chain;
}

}  // namespace pcartan
