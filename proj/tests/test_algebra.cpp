// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdeform/algebra.hpp"
#include "test_util.hpp"

using namespace ncdeform;

namespace {

TorusElement random_torus(testutil::Rng& rng, int rank, int terms) {
  TorusElement f(rank);
  for (int t = 0; t < terms; ++t) {
    f.add_term(rng.lattice(rank, 4),
               CycScalar::phase(RationalAngle(rng.rational(6)))
                   .scaled(rng.rational(3)));
  }
  return f;
}

PolyElement random_sphere_element(testutil::Rng& rng, const SphereAlgebra& s,
                                  int terms, int max_exp = 2) {
  PolyElement f(s.alg);
  for (int t = 0; t < terms; ++t) {
    Exponents e(s.alg->size(), 0);
    for (auto& x : e) x = static_cast<int>(rng.integer(0, max_exp));
    f.add_term(e, CycScalar::phase(RationalAngle(rng.rational(6)))
                      .scaled(rng.rational(3)));
  }
  return f;
}

}  // namespace

TEST_CASE("torus star product: rank-2 generator commutation") {
  const Rational theta(1, 3);
  const StarContext ctx = StarContext::mono(DeformMatrix::pair(theta).half());
  const TorusElement u10 = TorusElement::monomial({1, 0});
  const TorusElement u01 = TorusElement::monomial({0, 1});

  const TorusElement ab = star_product(ctx, u10, u01);
  const TorusElement ba = star_product(ctx, u01, u10);
  // phases are conjugate and their ratio is the full torus commutation phase
  const CycScalar phase = ab.coeffs().at({1, 1});
  const CycScalar rev = ba.coeffs().at({1, 1});
  CHECK(phase == CycScalar::phase(Rational(-1, 6)));
  CHECK(rev == conj(phase));
  CHECK(rev == phase * CycScalar::phase(theta));  // ratio e^{2 pi i theta}
}

TEST_CASE("theta = 0 gives the commutative product") {
  const StarContext ctx = StarContext::mono(DeformMatrix::zero(2));
  testutil::Rng rng(0x5eed0201);
  for (int k = 0; k < 30; ++k) {
    const TorusElement f = random_torus(rng, 2, 3), g = random_torus(rng, 2, 3);
    CHECK(star_product(ctx, f, g) == star_product(ctx, g, f));
  }
}

TEST_CASE("star product is associative (cocycle identity in disguise)") {
  testutil::Rng rng(0x5eed0202);
  for (int rank : {2, 3}) {
    const StarContext ctx = StarContext::mono(rng.deform_matrix(rank, 12));
    for (int k = 0; k < 25; ++k) {
      const TorusElement f = random_torus(rng, rank, 2),
                         g = random_torus(rng, rank, 2),
                         h = random_torus(rng, rank, 2);
      CHECK(star_product(ctx, star_product(ctx, f, g), h) ==
            star_product(ctx, f, star_product(ctx, g, h)));
    }
  }
}

TEST_CASE("involution") {
  const StarContext ctx =
      StarContext::mono(DeformMatrix::pair(Rational(1, 3)).half());
  // (U^r)* = U^{-r}
  CHECK(involution(TorusElement::monomial({2, -1})) ==
        TorusElement::monomial({-2, 1}));

  testutil::Rng rng(0x5eed0203);
  for (int k = 0; k < 100; ++k) {
    const TorusElement f = random_torus(rng, 2, 3), g = random_torus(rng, 2, 3);
    CHECK(involution(star_product(ctx, f, g)) ==
          star_product(ctx, involution(g), involution(f)));
    CHECK(involution(involution(f)) == f);
  }
}

TEST_CASE("deform_compose: reversibility and additivity") {
  testutil::Rng rng(0x5eed0204);
  const DeformMatrix q = rng.deform_matrix(2, 12);
  const StarContext ctx_q = StarContext::mono(q);
  const StarContext ctx_minus_q = StarContext::mono(-q);
  const StarContext ctx_zero = StarContext::mono(DeformMatrix::zero(2));

  for (int k = 0; k < 50; ++k) {
    const TorusElement f = random_torus(rng, 2, 3), g = random_torus(rng, 2, 3);
    // K = -Q recovers the commutative product
    CHECK(deform_compose(ctx_q, ctx_minus_q, f, g) ==
          star_product(ctx_zero, f, g));
    // random Q, K: phases compose additively
    const DeformMatrix k2 = rng.deform_matrix(2, 12);
    CHECK(deform_compose(ctx_q, StarContext::mono(k2), f, g) ==
          star_product(StarContext::mono(q + k2), f, g));
    // Q = K = 0 is the identity deformation
    CHECK(deform_compose(ctx_zero, ctx_zero, f, g) ==
          star_product(ctx_zero, f, g));
  }
}

TEST_CASE("derived sphere relations at theta = 1/3") {
  const Rational theta(1, 3);
  const SphereAlgebra s = make_sphere_s4(theta);
  const CycScalar lambda = CycScalar::phase(theta);
  const PolyElement alpha = s.a(0), beta = s.a(1);
  const PolyElement alpha_star = s.a_star(0), beta_star = s.a_star(1);
  const PolyElement x = s.x();
  auto star = [&](const PolyElement& f, const PolyElement& g) {
    return star_product(s.ctx, f, g);
  };

  // the Connes-Landi commutation family, derived from degrees alone
  CHECK(star(alpha, beta) == star(beta, alpha).scaled(lambda));
  CHECK(star(alpha, beta_star) == star(beta_star, alpha).scaled(conj(lambda)));
  CHECK(star(alpha, alpha_star) == star(alpha_star, alpha));
  CHECK(star(beta, beta_star) == star(beta_star, beta));
  // x is central
  for (const PolyElement* gen : {&alpha, &alpha_star, &beta, &beta_star}) {
    CHECK(star(x, *gen) == star(*gen, x));
  }
  // the radius relation has only trivial twist phases
  CHECK(star(alpha, alpha_star) + star(beta, beta_star) + star(x, x) ==
        alpha.commutative_product(alpha_star) +
            beta.commutative_product(beta_star) + x.commutative_product(x));
}

TEST_CASE("sphere involution matches the star structure") {
  const SphereAlgebra s = make_sphere_s4(Rational(1, 3));
  CHECK(involution(s.a(0)) == s.a_star(0));
  CHECK(involution(s.x()) == s.x());
  // (alpha x beta)* = beta* x alpha*
  CHECK(involution(star_product(s.ctx, s.a(0), s.a(1))) ==
        star_product(s.ctx, s.a_star(1), s.a_star(0)));

  testutil::Rng rng(0x5eed0205);
  for (int k = 0; k < 40; ++k) {
    const PolyElement f = random_sphere_element(rng, s, 3),
                      g = random_sphere_element(rng, s, 3);
    CHECK(involution(star_product(s.ctx, f, g)) ==
          star_product(s.ctx, involution(g), involution(f)));
  }
}

TEST_CASE("degree additivity and centrality") {
  testutil::Rng rng(0x5eed0206);
  const SphereAlgebra s = make_sphere_s4(Rational(1, 5));
  for (int k = 0; k < 20; ++k) {
    const PolyElement f = random_sphere_element(rng, s, 2),
                      g = random_sphere_element(rng, s, 2);
    const PolyElement p = star_product(s.ctx, f, g);
    // every monomial of f x g is a product of a monomial of f and one of g
    for (const auto& [e, c] : p.terms()) {
      bool found = false;
      for (const auto& [e1, c1] : f.terms()) {
        for (const auto& [e2, c2] : g.terms()) {
          bool match = true;
          for (std::size_t i = 0; i < e.size() && match; ++i) {
            match = (e[i] == e1[i] + e2[i]);
          }
          found |= match;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("reduce_mod_sphere") {
  const SphereAlgebra s = make_sphere_s4(Rational(1, 3));
  auto star = [&](const PolyElement& f, const PolyElement& g) {
    return star_product(s.ctx, f, g);
  };

  // x^2 -> 1 - alpha alpha* - beta beta*
  const PolyElement x2 = s.x().commutative_product(s.x());
  const PolyElement image = s.unit() -
                            s.a(0).commutative_product(s.a_star(0)) -
                            s.a(1).commutative_product(s.a_star(1));
  CHECK(reduce_mod_sphere(s, x2) == image);

  // the relation itself reduces to zero, in star form too
  CHECK(reduce_mod_sphere(s, radius_relation(s)).is_zero());
  CHECK(reduce_mod_sphere(s, star(s.a(0), s.a_star(0)) +
                                 star(s.a(1), s.a_star(1)) +
                                 star(s.x(), s.x()) - s.unit())
            .is_zero());

  testutil::Rng rng(0x5eed0207);
  for (int k = 0; k < 30; ++k) {
    const PolyElement f = random_sphere_element(rng, s, 3, 3);
    // ideal membership: (relation) x f reduces to zero
    CHECK(reduce_mod_sphere(s, star(radius_relation(s), f)).is_zero());
    CHECK(reduce_mod_sphere(s, star(f, radius_relation(s))).is_zero());
    // idempotence
    const PolyElement r1 = reduce_mod_sphere(s, f);
    CHECK(reduce_mod_sphere(s, r1) == r1);
  }
}

TEST_CASE("reduce_mod_sphere is confluent under term-order permutations") {
  // reducing f + g in either grouping, or piecewise, gives the same normal
  // form; together with idempotence this pins order-independence down
  const SphereAlgebra s = make_sphere_s4(Rational(1, 3));
  testutil::Rng rng(0x5eed0208);
  for (int k = 0; k < 30; ++k) {
    const PolyElement f = random_sphere_element(rng, s, 2, 4),
                      g = random_sphere_element(rng, s, 2, 4);
    CHECK(reduce_mod_sphere(s, f + g) ==
          reduce_mod_sphere(s, f) + reduce_mod_sphere(s, g));
    CHECK(reduce_mod_sphere(s, f + g) ==
          reduce_mod_sphere(s, reduce_mod_sphere(s, f) + g));
  }
}

TEST_CASE("classical sphere at theta = 0") {
  const SphereAlgebra s = make_sphere_s4(Rational(0));
  testutil::Rng rng(0x5eed0209);
  for (int k = 0; k < 20; ++k) {
    const PolyElement f = random_sphere_element(rng, s, 3),
                      g = random_sphere_element(rng, s, 3);
    CHECK(star_product(s.ctx, f, g) == f.commutative_product(g));
    CHECK(star_product(s.ctx, f, g) == star_product(s.ctx, g, f));
  }
  // (alpha alpha* + beta beta* + x^2)^2 reduces to 1, as on the round S^4
  const PolyElement r = radius_relation(s) + s.unit();
  CHECK(reduce_mod_sphere(s, r.commutative_product(r)) == s.unit());
}

TEST_CASE("star_word absorbs reordering phases at construction") {
  const SphereAlgebra s = make_sphere_s4(Rational(1, 3));
  const int ai = s.a_index(0), bi = s.a_index(1);
  const std::vector<int> word_ab{ai, bi}, word_ba{bi, ai};
  const PolyElement ab = star_word(s.ctx, s.alg, word_ab);
  const PolyElement ba = star_word(s.ctx, s.alg, word_ba);
  CHECK(ab == ba.scaled(CycScalar::phase(Rational(1, 3))));
}

TEST_CASE("context and algebra mismatches are rejected") {
  const SphereAlgebra s = make_sphere_s4(Rational(1, 3));
  const SphereAlgebra other = make_sphere_s4(Rational(1, 5));
  CHECK_THROWS_AS(star_product(s.ctx, s.a(0), other.a(0)),
                  std::invalid_argument);
  const StarContext bad = StarContext::mono(DeformMatrix::zero(3));
  CHECK_THROWS_AS(star_product(bad, s.a(0), s.a(1)), std::invalid_argument);
  const TorusElement f = TorusElement::monomial({1, 0});
  const TorusElement g3 = TorusElement::monomial({1, 0, 0});
  CHECK_THROWS_AS(star_product(bad, f, g3), std::invalid_argument);
}
