// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncdeform/angle.hpp"
#include "ncdeform/rational.hpp"

namespace ncdeform {

/// Exact scalar of the form  sum_q c_q * e^{2*pi*i*q}  with rational angles q
/// and rational coefficients c_q. Closed under +, -, *, conjugation; the
/// inverse of a pure phase is its conjugate. Every identity in this project
/// is decided through CycScalar::is_zero, which reduces the difference modulo
/// the cyclotomic polynomial of the common angle denominator, so equality is
/// exact and independent of how a value was assembled.
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(int v) : CycScalar(Rational(v)) {}  // NOLINT: implicit by design
  CycScalar(const Rational& v) {                // NOLINT
    if (v != 0) terms_.emplace(RationalAngle{}, v);
  }

  /// e^{2*pi*i*turns}
  static CycScalar phase(const RationalAngle& a);
  static CycScalar phase(const Rational& turns) {
    return phase(RationalAngle(turns));
  }
  static CycScalar i() { return phase(RationalAngle::of(1, 4)); }

  bool is_zero() const;
  bool operator==(const CycScalar& o) const { return (*this - o).is_zero(); }
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  CycScalar scaled(const Rational& c) const;

  /// Complex conjugate; an involutive ring anti-automorphism (here the ring
  /// is commutative, so simply an automorphism) fixing the rationals.
  friend CycScalar conj(const CycScalar& z);

  /// |z|^2 = z * conj(z), exact.
  CycScalar norm_squared() const { return *this * conj(*this); }

  /// The value as a plain rational if it is one (decided exactly).
  std::optional<Rational> as_rational() const;

  /// Stored terms (merged, rational-zero coefficients pruned). Two equal
  /// values may store different term lists; use operator== for equality.
  const std::map<RationalAngle, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Numeric value, for the float path and for display.
  std::pair<double, double> to_complex() const;

  std::string to_string() const;

 private:
  void add_term_(const RationalAngle& a, const Rational& c);
  std::vector<Rational> power_basis_() const;
  std::map<RationalAngle, Rational> terms_;
};

/// Coefficient list of the n-th cyclotomic polynomial, ascending degree.
/// Cached per thread.
const std::vector<Rational>& cyclotomic_polynomial(unsigned long n);

}  // namespace ncdeform
