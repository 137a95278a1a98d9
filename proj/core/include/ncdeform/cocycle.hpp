// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ncdeform/cyclotomic.hpp"

namespace ncdeform {

using LatticeVector = std::vector<long>;

/// Skewsymmetric rational deformation matrix (the parameter matrix theta, or
/// Q = theta/2, or the doubled block J). Skewness is what keeps complex
/// conjugation an involution for the twisted products, so construction
/// rejects anything else.
class DeformMatrix {
 public:
  DeformMatrix() = default;
  DeformMatrix(int rank, std::vector<Rational> row_major);

  static DeformMatrix zero(int rank);
  /// [[0, t], [-t, 0]]
  static DeformMatrix pair(const Rational& t);
  /// Validates skewsymmetry; throws std::invalid_argument otherwise.
  static DeformMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rank() const { return rank_; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * rank_ + j]; }

  DeformMatrix operator+(const DeformMatrix& o) const;
  DeformMatrix operator-() const;
  DeformMatrix scaled(const Rational& c) const;
  DeformMatrix half() const { return scaled(Rational(1, 2)); }

  bool operator==(const DeformMatrix& o) const = default;

  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<Rational> a_;
};

/// The 2l x 2l block matrix Q (+) (-Q): upper-left block Q, lower-right -Q,
/// zero off-diagonal blocks. This is the deformation direction that makes the
/// left-right translation twist compatible with the group structure.
struct DoubledMatrix {
  explicit DoubledMatrix(const DeformMatrix& q);
  const DeformMatrix& matrix() const { return j_; }
  int half_rank() const { return half_rank_; }

 private:
  int half_rank_;
  DeformMatrix j_;
};

/// r^T * theta * s, exact.
Rational bilinear_form(const DeformMatrix& theta, std::span<const long> r,
                       std::span<const long> s);

/// Upper-triangular pairing  sum_{j<k} r_j theta_{jk} s_k.
Rational upper_form(const DeformMatrix& theta, std::span<const long> r,
                    std::span<const long> s);

/// rho(r,s) = exp{-2 pi i sum_{j<k} r_j theta_{jk} s_k}.
/// Bicharacter in each argument. For rank 2 with theta_{12} = -t this equals
/// e^{2 pi i t r_1 s_2}, the familiar two-torus twist; the pair() constructor
/// above and a regression test pin that mapping down.
CycScalar rho(const DeformMatrix& theta, std::span<const long> r,
              std::span<const long> s);

/// sigma(r,s) = exp{-pi i sum_{j,k} r_j theta_{jk} s_k}, the skewsymmetrized
/// cocycle. sigma(r,r) = 1 and sigma(r,s) sigma(s,r) = 1.
CycScalar sigma(const DeformMatrix& theta, std::span<const long> r,
                std::span<const long> s);

/// b(r) = exp{+pi i sum_{j<k} r_j theta_{jk} r_k}, the coboundary linking the
/// two cocycles: sigma(r,s) = rho(r,s) b(r+s) b(r)^{-1} b(s)^{-1}.
CycScalar coboundary_between(const DeformMatrix& theta, std::span<const long> r);

using CocycleFn =
    std::function<CycScalar(std::span<const long>, std::span<const long>)>;

struct CocycleCheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;  // empty when ok
};

/// Verifies c(r, s+t) c(s,t) == c(r,s) c(r+s,t) on every supplied triple.
/// A failing triple is data, not an error.
CocycleCheckReport check_cocycle(
    const CocycleFn& c,
    const std::vector<std::array<LatticeVector, 3>>& triples);

/// Parses a matrix literal such as "[[0,1/3],[-1/3,0]]" (entries "p/q").
/// Rejects non-square and non-skewsymmetric input.
DeformMatrix parse_theta_matrix(std::string_view text);

LatticeVector add(const LatticeVector& a, const LatticeVector& b);
LatticeVector negate(const LatticeVector& a);

}  // namespace ncdeform
