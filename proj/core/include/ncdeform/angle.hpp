// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>

#include "ncdeform/rational.hpp"

namespace ncdeform {

/// A point on the unit circle written additively: the angle q stands for the
/// phase e^{2*pi*i*q}. Stored reduced into [0, 1), so adding angles is the
/// same as multiplying phases.
class RationalAngle {
 public:
  RationalAngle() = default;
  explicit RationalAngle(Rational turns) : turns_(std::move(turns)) {
    normalize_();
  }
  static RationalAngle of(long num, long den) {
    return RationalAngle(Rational(num, den));
  }

  const Rational& turns() const { return turns_; }
  bool is_zero() const { return turns_ == 0; }

  /// Denominator of the reduced angle; the order of the phase divides it.
  Integer denominator() const { return boost::multiprecision::denominator(turns_); }
  Integer numerator() const { return boost::multiprecision::numerator(turns_); }

  RationalAngle operator+(const RationalAngle& o) const {
    return RationalAngle(turns_ + o.turns_);
  }
  RationalAngle operator-(const RationalAngle& o) const {
    return RationalAngle(turns_ - o.turns_);
  }
  RationalAngle operator-() const { return RationalAngle(-turns_); }
  RationalAngle times(const Integer& k) const {
    return RationalAngle(turns_ * k);
  }

  bool operator==(const RationalAngle& o) const { return turns_ == o.turns_; }
  bool operator<(const RationalAngle& o) const { return turns_ < o.turns_; }

  std::string to_string() const { return rational_to_string(turns_); }

 private:
  void normalize_() {
    turns_ -= Rational(rational_floor(turns_));
    // floor guarantees 0 <= turns_ < 1
  }
  Rational turns_{0};
};

}  // namespace ncdeform
