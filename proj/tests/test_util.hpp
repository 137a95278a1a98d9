// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncdeform/cocycle.hpp"
#include "ncdeform/cyclotomic.hpp"

namespace ncdeform::testutil {

// Thin deterministic sampling layer (avoids distribution objects whose
// output differs across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(eng_() % span);
  }

  LatticeVector lattice(int rank, long bound) {
    LatticeVector v(rank);
    for (auto& x : v) x = integer(-bound, bound);
    return v;
  }

  Rational rational(long max_den) {
    const long den = integer(1, max_den);
    return Rational(integer(-den, den), den);
  }

  /// Random skewsymmetric matrix, denominators <= max_den.
  DeformMatrix deform_matrix(int rank, long max_den) {
    std::vector<Rational> a(static_cast<std::size_t>(rank) * rank);
    for (int i = 0; i < rank; ++i) {
      for (int j = i + 1; j < rank; ++j) {
        const Rational t = rational(max_den);
        a[static_cast<std::size_t>(i) * rank + j] = t;
        a[static_cast<std::size_t>(j) * rank + i] = -t;
      }
    }
    return DeformMatrix(rank, std::move(a));
  }

  CycScalar scalar(int max_terms = 3, long max_den = 6) {
    CycScalar z;
    const long n = integer(1, max_terms);
    for (long t = 0; t < n; ++t) {
      z += CycScalar::phase(RationalAngle(rational(max_den))).scaled(
          rational(4));
    }
    return z;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ncdeform::testutil
