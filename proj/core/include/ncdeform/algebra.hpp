// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncdeform/cocycle.hpp"
#include "ncdeform/cyclotomic.hpp"

namespace ncdeform {

// ---------------------------------------------------------------------------
// Star contexts
// ---------------------------------------------------------------------------

enum class Grading { mono, bi };

/// Grading kind plus the skewsymmetric matrix driving the twist. The product
/// rule on homogeneous elements is  a_u x b_v = e^{-2 pi i u.Mv} a_u b_v,
/// with M = Q for mono-graded algebras and M = Q (+) (-Q) for bigraded ones.
struct StarContext {
  Grading grading = Grading::mono;
  DeformMatrix matrix;

  static StarContext mono(DeformMatrix q) {
    return StarContext{Grading::mono, std::move(q)};
  }
  /// Builds the bigraded context with J = Q (+) (-Q).
  static StarContext doubled(const DeformMatrix& q) {
    return StarContext{Grading::bi, DoubledMatrix(q).matrix()};
  }

  int degree_rank() const { return matrix.rank(); }

  CycScalar twist(std::span<const long> u, std::span<const long> v) const {
    return CycScalar::phase(RationalAngle(-bilinear_form(matrix, u, v)));
  }

  bool operator==(const StarContext&) const = default;
};

// ---------------------------------------------------------------------------
// Torus elements: Fourier polynomials on the l-torus
// ---------------------------------------------------------------------------

/// Finitely supported map Z^l -> CycScalar; the key is both the basis
/// monomial U^r and its degree under the translation action. The involution
/// sends the coefficient at r to its conjugate at -r.
class TorusElement {
 public:
  explicit TorusElement(int rank) : rank_(rank) {}
  static TorusElement unit(int rank);
  static TorusElement monomial(LatticeVector r, CycScalar c = CycScalar(1));

  int rank() const { return rank_; }
  const std::map<LatticeVector, CycScalar>& coeffs() const { return coeffs_; }

  void add_term(const LatticeVector& r, const CycScalar& c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement scaled(const CycScalar& c) const;

  bool is_zero() const;
  bool operator==(const TorusElement& o) const {
    return (*this - o).is_zero();
  }

  /// Max sup-norm of the support; the degree-shift radius of L(f).
  long support_radius() const;

  std::string to_string() const;

 private:
  int rank_;
  std::map<LatticeVector, CycScalar> coeffs_;
};

TorusElement star_product(const StarContext& ctx, const TorusElement& f,
                          const TorusElement& g);
TorusElement involution(const TorusElement& f);
/// Product of the Q-deformed algebra re-deformed in direction K; equals the
/// (Q+K)-product on homogeneous pairs, and the plain commutative product when
/// K = -Q.
TorusElement deform_compose(const StarContext& first, const StarContext& second,
                            const TorusElement& f, const TorusElement& g);

// ---------------------------------------------------------------------------
// Polynomial elements over a table of graded generators
// ---------------------------------------------------------------------------

using Exponents = std::vector<int>;

struct GeneratorInfo {
  std::string name;
  LatticeVector degree;  // length = degree rank of the algebra
  int conj_partner;      // index of the generator carrying the conjugate
};

/// Immutable generator table: name, degree (mono or bi), and the conjugate
/// pairing. The underlying algebra is commutative; monomials are exponent
/// vectors over this table and all noncommutativity lives in the star twist.
class GradedAlgebra {
 public:
  GradedAlgebra(std::string name, int degree_rank,
                std::vector<GeneratorInfo> gens);

  const std::string& name() const { return name_; }
  int degree_rank() const { return degree_rank_; }
  int size() const { return static_cast<int>(gens_.size()); }
  const GeneratorInfo& gen(int i) const { return gens_.at(i); }
  int index_of(std::string_view gen_name) const;

  LatticeVector monomial_degree(const Exponents& e) const;
  int monomial_total_degree(const Exponents& e) const;
  std::string monomial_to_string(const Exponents& e) const;

 private:
  std::string name_;
  int degree_rank_;
  std::vector<GeneratorInfo> gens_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class PolyElement {
 public:
  explicit PolyElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static PolyElement unit(AlgebraPtr alg);
  static PolyElement generator(AlgebraPtr alg, int index);
  static PolyElement monomial(AlgebraPtr alg, Exponents e,
                              CycScalar c = CycScalar(1));

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<Exponents, CycScalar>& terms() const { return terms_; }

  void add_term(const Exponents& e, const CycScalar& c);

  PolyElement operator+(const PolyElement& o) const;
  PolyElement operator-(const PolyElement& o) const;
  PolyElement scaled(const CycScalar& c) const;

  /// Product in the commutative base algebra (no twist).
  PolyElement commutative_product(const PolyElement& o) const;

  bool is_zero() const;
  bool operator==(const PolyElement& o) const { return (*this - o).is_zero(); }

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::map<Exponents, CycScalar> terms_;
};

PolyElement star_product(const StarContext& ctx, const PolyElement& f,
                         const PolyElement& g);
PolyElement involution(const PolyElement& f);
PolyElement deform_compose(const StarContext& first, const StarContext& second,
                           const PolyElement& f, const PolyElement& g);

/// Iterated star product of generators, left to right. This is how an
/// ordered word of generators lands in the normal-ordered representation:
/// the reordering phases are absorbed into the coefficient here.
PolyElement star_word(const StarContext& ctx, const AlgebraPtr& alg,
                      std::span<const int> gen_indices);

// ---------------------------------------------------------------------------
// The even sphere algebras
// ---------------------------------------------------------------------------

/// Polynomial algebra of the 2l-sphere deformation: generators a_1..a_l of
/// degrees e_1..e_l, their conjugates, and one central self-conjugate x.
/// The star context carries Q = theta/2. For l = 2 the generators are named
/// alpha, beta and the scalar-parameter constructor uses theta_{12} = -t so
/// that alpha x beta = e^{2 pi i t} beta x alpha.
struct SphereAlgebra {
  int l = 0;
  DeformMatrix theta;
  StarContext ctx;
  AlgebraPtr alg;

  int a_index(int i) const { return 2 * i; }
  int a_star_index(int i) const { return 2 * i + 1; }
  int x_index() const { return 2 * l; }

  PolyElement unit() const { return PolyElement::unit(alg); }
  PolyElement a(int i) const { return PolyElement::generator(alg, a_index(i)); }
  PolyElement a_star(int i) const {
    return PolyElement::generator(alg, a_star_index(i));
  }
  PolyElement x() const { return PolyElement::generator(alg, x_index()); }
};

SphereAlgebra make_sphere_algebra(const DeformMatrix& theta);
/// S^4 with the scalar parameter convention above.
SphereAlgebra make_sphere_s4(const Rational& theta);

/// sum_i a_i a_i* + x^2 - 1. All of its monomials have degree zero, so the
/// ideal it generates is the same for the twisted and the plain product.
PolyElement radius_relation(const SphereAlgebra& s);

/// Canonical representative modulo the radius relation: rewrites x^2 to
/// 1 - sum_i a_i a_i* until every monomial has x-exponent <= 1. Equality in
/// the quotient is equality of normal forms.
PolyElement reduce_mod_sphere(const SphereAlgebra& s, const PolyElement& f);

}  // namespace ncdeform
