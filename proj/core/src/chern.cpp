// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/chern.hpp"

#include <stdexcept>

namespace ncdeform {

AlgebraMatrix::AlgebraMatrix(const SphereAlgebra& s, int rows, int cols)
    : s_(&s), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, PolyElement(s.alg)) {}

AlgebraMatrix AlgebraMatrix::identity(const SphereAlgebra& s, int n) {
  AlgebraMatrix m(s, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s.unit();
  return m;
}

AlgebraMatrix AlgebraMatrix::star_mul(const AlgebraMatrix& o) const {
  if (cols_ != o.rows_ || s_->alg != o.s_->alg) {
    throw std::invalid_argument("matrix shape or algebra mismatch");
  }
  AlgebraMatrix r(*s_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      PolyElement acc(s_->alg);
      for (int k = 0; k < cols_; ++k) {
        acc = acc + star_product(s_->ctx, at(i, k), o.at(k, j));
      }
      r.at(i, j) = std::move(acc);
    }
  }
  return r;
}

AlgebraMatrix AlgebraMatrix::operator+(const AlgebraMatrix& o) const {
  AlgebraMatrix r(*s_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = entries_[i] + o.entries_[i];
  }
  return r;
}

AlgebraMatrix AlgebraMatrix::operator-(const AlgebraMatrix& o) const {
  return *this + o.scaled(CycScalar(-1));
}

AlgebraMatrix AlgebraMatrix::scaled(const CycScalar& c) const {
  AlgebraMatrix r(*s_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = entries_[i].scaled(c);
  }
  return r;
}

AlgebraMatrix AlgebraMatrix::adjoint() const {
  AlgebraMatrix r(*s_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = involution(at(i, j));
  }
  return r;
}

AlgebraMatrix AlgebraMatrix::reduced() const {
  AlgebraMatrix r(*s_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    r.entries_[i] = reduce_mod_sphere(*s_, entries_[i]);
  }
  return r;
}

bool AlgebraMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const PolyElement& e) { return e.is_zero(); });
}

PolyElement AlgebraMatrix::trace() const {
  PolyElement t(s_->alg);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
  return t;
}

ProjectorCheck certify_projector(const AlgebraMatrix& p) {
  ProjectorCheck c;
  c.self_adjoint = (p - p.adjoint()).reduced().is_zero();
  c.idempotent = (p.star_mul(p) - p).reduced().is_zero();
  return c;
}

namespace {

AlgebraMatrix build_candidate(const SphereAlgebra& s, const CycScalar& mu1,
                              const CycScalar& mu2) {
  if (s.l != 2) {
    throw std::invalid_argument("the instanton projector lives over S^4");
  }
  const PolyElement alpha = s.a(0), beta = s.a(1);
  const PolyElement alpha_s = s.a_star(0), beta_s = s.a_star(1);
  const PolyElement x = s.x();

  AlgebraMatrix y(s, 4, 4);
  y.at(0, 0) = x;
  y.at(1, 1) = x;
  y.at(2, 2) = x.scaled(CycScalar(-1));
  y.at(3, 3) = x.scaled(CycScalar(-1));
  // T block
  y.at(0, 2) = alpha;
  y.at(0, 3) = beta.scaled(mu1);
  y.at(1, 2) = beta_s.scaled(mu2);
  y.at(1, 3) = alpha_s;
  // T* block
  y.at(2, 0) = alpha_s;
  y.at(2, 1) = beta.scaled(conj(mu2));
  y.at(3, 0) = beta_s.scaled(conj(mu1));
  y.at(3, 1) = alpha;

  const CycScalar half(Rational(1, 2));
  return (AlgebraMatrix::identity(s, 4) + y).scaled(half);
}

}  // namespace

InstantonCertificate instanton_projector(const SphereAlgebra& s) {
  // lambda = commutation phase between the two charged generators
  const auto& d1 = s.alg->gen(s.a_index(0)).degree;
  const auto& d2 = s.alg->gen(s.a_index(1)).degree;
  const CycScalar lambda = s.ctx.twist(d1, d2) * conj(s.ctx.twist(d2, d1));

  const CycScalar one(1), minus(-1);
  const std::vector<CycScalar> base{one,          lambda,
                                    conj(lambda), one.scaled(Rational(-1)),
                                    minus * lambda, minus * conj(lambda)};

  InstantonCertificate best{AlgebraMatrix(s, 4, 4), CycScalar(0), CycScalar(0),
                            0, 0};
  bool found = false;
  for (const CycScalar& mu1 : base) {
    for (const CycScalar& mu2 : base) {
      ++best.candidates_tried;
      const AlgebraMatrix candidate = build_candidate(s, mu1, mu2);
      if (certify_projector(candidate).ok()) {
        ++best.candidates_certified;
        if (!found) {
          best.p = candidate;
          best.mu1 = mu1;
          best.mu2 = mu2;
          found = true;
        }
      }
    }
  }
  if (!found) {
    throw std::runtime_error(
        "no phase assignment in the search set certifies the projector");
  }
  return best;
}

AlgebraMatrix perturb_entry_phase(const AlgebraMatrix& p, int row, int col,
                                  const CycScalar& phase) {
  AlgebraMatrix out = p;
  out.at(row, col) = out.at(row, col).scaled(phase);
  return out;
}

namespace {

// normal form, then drop the constant term (class modulo scalars)
PolyElement barred(const SphereAlgebra& s, const PolyElement& f) {
  PolyElement r = reduce_mod_sphere(s, f);
  PolyElement out(s.alg);
  const Exponents unit_mono(s.alg->size(), 0);
  for (const auto& [e, c] : r.terms()) {
    if (e == unit_mono) continue;
    out.add_term(e, c);
  }
  return out;
}

AlgebraMatrix centered(const AlgebraMatrix& p) {
  const CycScalar half(Rational(1, 2));
  return p - AlgebraMatrix::identity(p.sphere(), p.rows()).scaled(half);
}

}  // namespace

PolyElement ch0(const AlgebraMatrix& p) {
  const SphereAlgebra& s = p.sphere();
  return reduce_mod_sphere(s, centered(p).trace());
}

Ch1Result ch1(const AlgebraMatrix& p) {
  const SphereAlgebra& s = p.sphere();
  const AlgebraMatrix c = centered(p);
  Ch1Result result;
  const int n = p.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const PolyElement slot0 = reduce_mod_sphere(s, c.at(i, j));
      if (slot0.is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        const PolyElement slot1 = barred(s, p.at(j, k));
        if (slot1.is_zero()) continue;
        const PolyElement slot2 = barred(s, p.at(k, i));
        if (slot2.is_zero()) continue;
        for (const auto& [e0, c0] : slot0.terms()) {
          for (const auto& [e1, c1] : slot1.terms()) {
            for (const auto& [e2, c2] : slot2.terms()) {
              ++result.terms_before;
              result.chain.add({e0, e1, e2}, c0 * c1 * c2);
            }
          }
        }
      }
    }
  }
  // report the surviving terms (exactly zero coefficients removed)
  for (const auto& [key, coeff] : result.chain.terms()) {
    if (!coeff.is_zero()) ++result.terms_after;
  }
  return result;
}

SphereChain hochschild_boundary(const SphereAlgebra& s, const SphereChain& c) {
  if (c.slots() != 3) throw std::invalid_argument("need a 2-chain");
  SphereChain out(2);
  for (const auto& [key, coeff] : c.terms()) {
    const PolyElement a0 = PolyElement::monomial(s.alg, key[0]);
    const PolyElement a1 = PolyElement::monomial(s.alg, key[1]);
    const PolyElement a2 = PolyElement::monomial(s.alg, key[2]);
    auto emit = [&](const PolyElement& first, const PolyElement& second,
                    const CycScalar& sign) {
      const PolyElement f = reduce_mod_sphere(s, first);
      const PolyElement g = barred(s, second);
      for (const auto& [e0, c0] : f.terms()) {
        for (const auto& [e1, c1] : g.terms()) {
          out.add({e0, e1}, coeff * sign * c0 * c1);
        }
      }
    };
    emit(star_product(s.ctx, a0, a1), a2, CycScalar(1));
    emit(a0, star_product(s.ctx, a1, a2), CycScalar(-1));
    emit(star_product(s.ctx, a2, a0), a1, CycScalar(1));
  }
  return out;
}

ComplexOp pi_d(const TripleBundle<std::complex<double>>& b,
               const TorusChain& chain) {
  ComplexOp out(b.lat.dim(), 0);
  for (const auto& [key, coeff] : chain.terms()) {
    if (coeff.is_zero()) continue;
    ComplexOp acc = l_rep(b, TorusElement::monomial(key[0]));
    for (int s = 1; s < chain.slots(); ++s) {
      const ComplexOp lf = l_rep(b, TorusElement::monomial(key[s]));
      acc = acc * commutator(b.dirac, lf).scaled(dirac_scale());
    }
    const auto [re, im] = coeff.to_complex();
    out = out + acc.scaled({re, im});
  }
  return out;
}

}  // namespace ncdeform
