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

#include "pcartan/lie_algebra.hpp"

#include <array>
#include <string>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace pcartan {

namespace {

// All Pauli words on `qubits` qubits, identity word first.
std::vector<ComplexMatrix> pauli_words(int qubits) {
  std::vector<ComplexMatrix> words{ComplexMatrix::Identity(1, 1)};
  const std::array<ComplexMatrix, 4> single = {pauli::identity(), pauli::x(), pauli::y(),
                                               pauli::z()};
  for (int q = 0; q < qubits; ++q) {
    std::vector<ComplexMatrix> next;
    next.reserve(words.size() * 4);
    for (const auto& w : words) {
      for (const auto& s : single) next.push_back(kron(w, s));
    }
    words = std::move(next);
  }
  return words;
}

ComplexMatrix ikron(const ComplexMatrix& a, const ComplexMatrix& b) { return kI * kron(a, b); }

// Real-linear coordinates: entries of an anti-Hermitian matrix stacked as
// (re, im) pairs.
Eigen::VectorXd realify(const ComplexMatrix& m) {
  const Eigen::Index n = m.size();
  Eigen::VectorXd v(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v(2 * k) = m.data()[k].real();
    v(2 * k + 1) = m.data()[k].imag();
  }
  return v;
}

Eigen::MatrixXd realify(const std::vector<ComplexMatrix>& basis, Eigen::Index entries) {
  Eigen::MatrixXd b(2 * entries, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    b.col(static_cast<Eigen::Index>(k)) = realify(basis[k]);
  }
  return b;
}

class SpanProjector {
 public:
  explicit SpanProjector(const std::vector<ComplexMatrix>& basis) {
    if (!basis.empty()) {
      b_ = realify(basis, basis.front().size());
      qr_.compute(b_);
    }
  }

  double residual(const ComplexMatrix& m) const {
    const Eigen::VectorXd v = realify(m);
    if (b_.size() == 0) return v.cwiseAbs().maxCoeff();
    return (b_ * qr_.solve(v) - v).cwiseAbs().maxCoeff();
  }

 private:
  Eigen::MatrixXd b_;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

bool brackets_within(const std::vector<ComplexMatrix>& lhs, const std::vector<ComplexMatrix>& rhs,
                     const SpanProjector& target, double tol) {
  for (const auto& a : lhs) {
    for (const auto& b : rhs) {
      if (target.residual(commutator(a, b)) > tol) return false;
    }
  }
  return true;
}

}  // namespace

LieSpan lie_span(int n, DofConvention convention) {
  if (n < 1 || n > 3) {
    throw InvalidInput("lie_span: level must be 1, 2 or 3, got " + std::to_string(n));
  }
  LieSpan span;
  span.level = n;
  span.convention = convention;
  const bool sp = convention == DofConvention::kSpatialPolarization;

  const auto words = pauli_words(n - 1);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& w = words[k];
    if (k != 0) span.l_basis.push_back(sp ? ikron(pauli::identity(), w) : ikron(w, pauli::identity()));
    span.l_basis.push_back(sp ? ikron(pauli::z(), w) : ikron(w, pauli::z()));
    span.p_basis.push_back(sp ? ikron(pauli::x(), w) : ikron(w, pauli::x()));
    span.p_basis.push_back(sp ? ikron(pauli::y(), w) : ikron(w, pauli::y()));
  }

  // Cartan subalgebra, built up from its smallest case (without the factor i).
  std::vector<ComplexMatrix> h;
  if (sp && n >= 2) {
    h = {kron(pauli::x(), pauli::y()), kron(pauli::y(), pauli::x())};
    for (int level = 3; level <= n; ++level) {
      std::vector<ComplexMatrix> next;
      for (const auto& g : h) next.push_back(kron(g, pauli::identity()));
      for (const auto& g : h) next.push_back(kron(g, pauli::z()));
      h = std::move(next);
    }
  } else {
    h = {pauli::x()};
    for (int level = 2; level <= n; ++level) {
      std::vector<ComplexMatrix> next;
      for (const auto& g : h) next.push_back(kron(pauli::identity(), g));
      for (const auto& g : h) next.push_back(kron(pauli::z(), g));
      h = std::move(next);
    }
  }
  for (const auto& g : h) span.h_basis.push_back(kI * g);
  return span;
}

bool in_real_span(const ComplexMatrix& m, const std::vector<ComplexMatrix>& basis, double tol) {
  return SpanProjector(basis).residual(m) <= tol;
}

CartanConditionReport check_cartan_conditions(const LieSpan& span, const ToleranceConfig& tol) {
  const double eps = tol.angle_tol;
  const SpanProjector l_proj(span.l_basis);
  const SpanProjector p_proj(span.p_basis);

  CartanConditionReport report;
  report.ll_in_l = brackets_within(span.l_basis, span.l_basis, l_proj, eps);
  report.lp_in_p = brackets_within(span.l_basis, span.p_basis, p_proj, eps);
  report.pp_in_l = brackets_within(span.p_basis, span.p_basis, l_proj, eps);

  report.h_in_p = true;
  for (const auto& g : span.h_basis) {
    if (p_proj.residual(g) > eps) report.h_in_p = false;
  }
  report.h_abelian = true;
  for (const auto& a : span.h_basis) {
    for (const auto& b : span.h_basis) {
      if (max_abs(commutator(a, b)) > eps) report.h_abelian = false;
    }
  }

  // Centralizer of h inside p: kernel of x ↦ ([h_j, Σ x_k p_k])_j.
  if (!span.p_basis.empty() && !span.h_basis.empty()) {
    const Eigen::Index entries = span.p_basis.front().size();
    const auto np = static_cast<Eigen::Index>(span.p_basis.size());
    const auto nh = static_cast<Eigen::Index>(span.h_basis.size());
    Eigen::MatrixXd map(2 * entries * nh, np);
    for (Eigen::Index k = 0; k < np; ++k) {
      for (Eigen::Index j = 0; j < nh; ++j) {
        map.block(2 * entries * j, k, 2 * entries, 1) =
            realify(commutator(span.h_basis[static_cast<std::size_t>(j)],
                               span.p_basis[static_cast<std::size_t>(k)]));
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
    svd.setThreshold(eps);
    const Eigen::Index kernel = np - svd.rank();

    Eigen::MatrixXd hb = realify(span.h_basis, entries);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(hb);
    lu.setThreshold(eps);
    report.h_maximal = report.h_in_p && kernel == lu.rank();
  } else {
    report.h_maximal = false;
  }
  return report;
}

}  // namespace pcartan
