// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncdeform {

// ---------------------------------------------------------------------------
// TorusElement
// ---------------------------------------------------------------------------

TorusElement TorusElement::unit(int rank) {
  return monomial(LatticeVector(rank, 0));
}

TorusElement TorusElement::monomial(LatticeVector r, CycScalar c) {
  TorusElement f(static_cast<int>(r.size()));
  f.add_term(r, c);
  return f;
}

void TorusElement::add_term(const LatticeVector& r, const CycScalar& c) {
  if (static_cast<int>(r.size()) != rank_) {
    throw std::invalid_argument("torus element: degree rank mismatch");
  }
  if (c.term_count() == 0) return;
  auto [it, inserted] = coeffs_.emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.term_count() == 0) coeffs_.erase(it);
  }
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("torus rank mismatch");
  TorusElement r = *this;
  for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  return *this + o.scaled(CycScalar(-1));
}

TorusElement TorusElement::scaled(const CycScalar& c) const {
  TorusElement r(rank_);
  for (const auto& [k, v] : coeffs_) r.add_term(k, v * c);
  return r;
}

bool TorusElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

long TorusElement::support_radius() const {
  long radius = 0;
  for (const auto& [k, c] : coeffs_) {
    if (c.is_zero()) continue;
    for (long x : k) radius = std::max(radius, std::abs(x));
  }
  return radius;
}

std::string TorusElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*U(";
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ")";
  }
  return out.str();
}

namespace {
void require_mono(const StarContext& ctx, int rank) {
  if (ctx.grading != Grading::mono || ctx.degree_rank() != rank) {
    throw std::invalid_argument("star context does not match mono grading");
  }
}
}  // namespace

TorusElement star_product(const StarContext& ctx, const TorusElement& f,
                          const TorusElement& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("torus rank mismatch");
  require_mono(ctx, f.rank());
  TorusElement out(f.rank());
  for (const auto& [r, cf] : f.coeffs()) {
    for (const auto& [s, cg] : g.coeffs()) {
      out.add_term(add(r, s), ctx.twist(r, s) * cf * cg);
    }
  }
  return out;
}

TorusElement involution(const TorusElement& f) {
  TorusElement out(f.rank());
  for (const auto& [r, c] : f.coeffs()) out.add_term(negate(r), conj(c));
  return out;
}

TorusElement deform_compose(const StarContext& first, const StarContext& second,
                            const TorusElement& f, const TorusElement& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("torus rank mismatch");
  require_mono(first, f.rank());
  require_mono(second, f.rank());
  TorusElement out(f.rank());
  for (const auto& [r, cf] : f.coeffs()) {
    for (const auto& [s, cg] : g.coeffs()) {
      out.add_term(add(r, s),
                   first.twist(r, s) * second.twist(r, s) * cf * cg);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GradedAlgebra / PolyElement
// ---------------------------------------------------------------------------

GradedAlgebra::GradedAlgebra(std::string name, int degree_rank,
                             std::vector<GeneratorInfo> gens)
    : name_(std::move(name)), degree_rank_(degree_rank), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (static_cast<int>(g.degree.size()) != degree_rank_) {
      throw std::invalid_argument("generator degree has wrong rank");
    }
    if (g.conj_partner < 0 || g.conj_partner >= size()) {
      throw std::invalid_argument("generator conjugate partner out of range");
    }
  }
  // the conjugate of a degree-d generator must carry degree -d
  for (int i = 0; i < size(); ++i) {
    const auto& d = gens_[i].degree;
    const auto& pd = gens_[gens_[i].conj_partner].degree;
    for (int k = 0; k < degree_rank_; ++k) {
      if (d[k] != -pd[k]) {
        throw std::invalid_argument("conjugate partner degree mismatch");
      }
    }
  }
}

int GradedAlgebra::index_of(std::string_view gen_name) const {
  for (int i = 0; i < size(); ++i) {
    if (gens_[i].name == gen_name) return i;
  }
  throw std::invalid_argument("no generator named '" + std::string(gen_name) +
                              "' in algebra " + name_);
}

LatticeVector GradedAlgebra::monomial_degree(const Exponents& e) const {
  LatticeVector d(degree_rank_, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    for (int k = 0; k < degree_rank_; ++k) d[k] += e[i] * gens_[i].degree[k];
  }
  return d;
}

int GradedAlgebra::monomial_total_degree(const Exponents& e) const {
  int t = 0;
  for (int x : e) t += x;
  return t;
}

std::string GradedAlgebra::monomial_to_string(const Exponents& e) const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) out << " ";
    any = true;
    out << gens_[i].name;
    if (e[i] > 1) out << "^" << e[i];
  }
  return any ? out.str() : "1";
}

PolyElement PolyElement::unit(AlgebraPtr alg) {
  Exponents e(alg->size(), 0);
  return monomial(std::move(alg), std::move(e));
}

PolyElement PolyElement::generator(AlgebraPtr alg, int index) {
  Exponents e(alg->size(), 0);
  e.at(index) = 1;
  return monomial(std::move(alg), std::move(e));
}

PolyElement PolyElement::monomial(AlgebraPtr alg, Exponents e, CycScalar c) {
  PolyElement f(std::move(alg));
  f.add_term(e, c);
  return f;
}

void PolyElement::add_term(const Exponents& e, const CycScalar& c) {
  if (static_cast<int>(e.size()) != alg_->size()) {
    throw std::invalid_argument("monomial length does not match generator count");
  }
  if (c.term_count() == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.term_count() == 0) terms_.erase(it);
  }
}

namespace {
void require_same_algebra(const PolyElement& f, const PolyElement& g) {
  if (f.algebra() != g.algebra()) {
    throw std::invalid_argument("elements live over different algebras");
  }
}
}  // namespace

PolyElement PolyElement::operator+(const PolyElement& o) const {
  require_same_algebra(*this, o);
  PolyElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

PolyElement PolyElement::operator-(const PolyElement& o) const {
  return *this + o.scaled(CycScalar(-1));
}

PolyElement PolyElement::scaled(const CycScalar& c) const {
  PolyElement r(alg_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

PolyElement PolyElement::commutative_product(const PolyElement& o) const {
  require_same_algebra(*this, o);
  PolyElement r(alg_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

bool PolyElement::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

std::string PolyElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")*" << alg_->monomial_to_string(e);
  }
  return out.str();
}

PolyElement star_product(const StarContext& ctx, const PolyElement& f,
                         const PolyElement& g) {
  require_same_algebra(f, g);
  if (ctx.degree_rank() != f.algebra()->degree_rank()) {
    throw std::invalid_argument("star context rank does not match algebra");
  }
  PolyElement out(f.algebra());
  const auto& alg = *f.algebra();
  for (const auto& [e1, c1] : f.terms()) {
    const LatticeVector d1 = alg.monomial_degree(e1);
    for (const auto& [e2, c2] : g.terms()) {
      const LatticeVector d2 = alg.monomial_degree(e2);
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, ctx.twist(d1, d2) * c1 * c2);
    }
  }
  return out;
}

PolyElement involution(const PolyElement& f) {
  const auto& alg = *f.algebra();
  PolyElement out(f.algebra());
  for (const auto& [e, c] : f.terms()) {
    Exponents e2(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) e2[alg.gen(static_cast<int>(i)).conj_partner] += e[i];
    }
    out.add_term(e2, conj(c));
  }
  return out;
}

PolyElement deform_compose(const StarContext& first, const StarContext& second,
                           const PolyElement& f, const PolyElement& g) {
  require_same_algebra(f, g);
  PolyElement out(f.algebra());
  const auto& alg = *f.algebra();
  for (const auto& [e1, c1] : f.terms()) {
    const LatticeVector d1 = alg.monomial_degree(e1);
    for (const auto& [e2, c2] : g.terms()) {
      const LatticeVector d2 = alg.monomial_degree(e2);
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, first.twist(d1, d2) * second.twist(d1, d2) * c1 * c2);
    }
  }
  return out;
}

PolyElement star_word(const StarContext& ctx, const AlgebraPtr& alg,
                      std::span<const int> gen_indices) {
  PolyElement acc = PolyElement::unit(alg);
  for (int i : gen_indices) {
    acc = star_product(ctx, acc, PolyElement::generator(alg, i));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Sphere algebras
// ---------------------------------------------------------------------------

SphereAlgebra make_sphere_algebra(const DeformMatrix& theta) {
  const int l = theta.rank();
  std::vector<GeneratorInfo> gens;
  gens.reserve(2 * l + 1);
  for (int i = 0; i < l; ++i) {
    LatticeVector ei(l, 0);
    ei[i] = 1;
    std::string base;
    if (l == 2) {
      base = (i == 0) ? "alpha" : "beta";
    } else {
      base = "a" + std::to_string(i + 1);
    }
    gens.push_back({base, ei, 2 * i + 1});
    gens.push_back({base + "*", negate(ei), 2 * i});
  }
  gens.push_back({"x", LatticeVector(l, 0), 2 * l});

  SphereAlgebra s;
  s.l = l;
  s.theta = theta;
  s.ctx = StarContext::mono(theta.half());
  s.alg = std::make_shared<GradedAlgebra>("sphere_S" + std::to_string(2 * l),
                                          l, std::move(gens));
  return s;
}

SphereAlgebra make_sphere_s4(const Rational& theta) {
  return make_sphere_algebra(DeformMatrix::pair(-theta));
}

PolyElement radius_relation(const SphereAlgebra& s) {
  PolyElement rel(s.alg);
  for (int i = 0; i < s.l; ++i) {
    rel = rel + s.a(i).commutative_product(s.a_star(i));
  }
  rel = rel + s.x().commutative_product(s.x()) - s.unit();
  return rel;
}

PolyElement reduce_mod_sphere(const SphereAlgebra& s, const PolyElement& f) {
  if (f.algebra() != s.alg) {
    throw std::invalid_argument("element does not live over this sphere algebra");
  }
  const int xi = s.x_index();
  // 1 - sum_i a_i a_i*
  PolyElement x2_image = s.unit();
  for (int i = 0; i < s.l; ++i) {
    x2_image = x2_image - s.a(i).commutative_product(s.a_star(i));
  }

  PolyElement cur = f;
  while (true) {
    const auto& terms = cur.terms();
    auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) {
      return t.first[xi] >= 2 && !t.second.is_zero();
    });
    if (it == terms.end()) break;

    PolyElement next(s.alg);
    for (const auto& [e, c] : terms) {
      if (e[xi] < 2) {
        next.add_term(e, c);
        continue;
      }
      Exponents rest = e;
      rest[xi] -= 2;
      // substitute one factor x^2 by its image and keep the remainder
      for (const auto& [e2, c2] : x2_image.terms()) {
        Exponents merged(rest.size());
        for (std::size_t i = 0; i < merged.size(); ++i) {
          merged[i] = rest[i] + e2[i];
        }
        next.add_term(merged, c * c2);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ncdeform
