// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncdeform/cyclotomic.hpp"
#include "test_util.hpp"

using namespace ncdeform;

TEST_CASE("phase basics") {
  CHECK(CycScalar::phase(Rational(0)) == CycScalar(1));
  CHECK(CycScalar::phase(Rational(1, 2)) == CycScalar(-1));
  CHECK(CycScalar::phase(Rational(1, 3)) * CycScalar::phase(Rational(2, 3)) ==
        CycScalar(1));
  // phase(a) * phase(b) == phase(a + b)
  CHECK(CycScalar::phase(Rational(1, 5)) * CycScalar::phase(Rational(1, 4)) ==
        CycScalar::phase(Rational(9, 20)));
}

TEST_CASE("angles normalize into [0,1)") {
  CHECK(RationalAngle(Rational(5, 4)) == RationalAngle(Rational(1, 4)));
  CHECK(RationalAngle(Rational(-1, 4)) == RationalAngle(Rational(3, 4)));
  CHECK(RationalAngle(Rational(7)).is_zero());
}

TEST_CASE("conjugation") {
  CHECK(conj(CycScalar::phase(Rational(1, 4))) ==
        CycScalar::phase(Rational(3, 4)));
  CHECK(conj(CycScalar(1) + CycScalar::phase(Rational(1, 2))).is_zero());

  testutil::Rng rng(0x5eed0001);
  for (int k = 0; k < 100; ++k) {
    const CycScalar z = rng.scalar();
    CHECK(conj(conj(z)) == z);
  }
  // anti-automorphism fixing rationals (commutative, so also multiplicative)
  for (int k = 0; k < 50; ++k) {
    const CycScalar a = rng.scalar(), b = rng.scalar();
    CHECK(conj(a * b) == conj(b) * conj(a));
    CHECK(conj(a + b) == conj(a) + conj(b));
  }
  CHECK(conj(CycScalar(Rational(7, 3))) == CycScalar(Rational(7, 3)));
}

TEST_CASE("phases have modulus one exactly") {
  testutil::Rng rng(0x5eed0002);
  for (int k = 0; k < 200; ++k) {
    const CycScalar p = CycScalar::phase(RationalAngle(rng.rational(12)));
    CHECK(p * conj(p) == CycScalar(1));
  }
}

TEST_CASE("ring axioms on random triples") {
  testutil::Rng rng(0x5eed0003);
  for (int k = 0; k < 60; ++k) {
    const CycScalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("hidden vanishing sums of roots of unity are detected") {
  // 1 + w + w^2 = 0 for w a primitive cube root
  CycScalar z = CycScalar(1) + CycScalar::phase(Rational(1, 3)) +
                CycScalar::phase(Rational(2, 3));
  CHECK(z.is_zero());
  // e^{i pi/3} - e^{2 i pi/3} = 1
  CHECK(CycScalar::phase(Rational(1, 6)) - CycScalar::phase(Rational(1, 3)) ==
        CycScalar(1));
  // i as a phase versus i as a coefficient route
  CHECK(CycScalar::i() * CycScalar::i() == CycScalar(-1));
  // mixed denominators
  CycScalar w = CycScalar::phase(Rational(1, 5)) +
                CycScalar::phase(Rational(2, 5)) +
                CycScalar::phase(Rational(3, 5)) +
                CycScalar::phase(Rational(4, 5));
  CHECK(w == CycScalar(-1));
}

TEST_CASE("as_rational sees through phase representations") {
  CHECK(CycScalar::phase(Rational(1, 2)).as_rational() == Rational(-1));
  CHECK((CycScalar::phase(Rational(1, 3)) + CycScalar::phase(Rational(2, 3)))
            .as_rational() == Rational(-1));
  CHECK(!CycScalar::phase(Rational(1, 3)).as_rational().has_value());
}

TEST_CASE("cyclotomic polynomials") {
  using V = std::vector<Rational>;
  CHECK(cyclotomic_polynomial(1) == V{-1, 1});
  CHECK(cyclotomic_polynomial(2) == V{1, 1});
  CHECK(cyclotomic_polynomial(4) == V{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == V{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}
