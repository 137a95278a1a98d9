// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/rational.hpp"

#include <limits>
#include <stdexcept>

namespace ncdeform {

Rational parse_rational(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  std::size_t begin = 0, end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" +
                                std::string(text) + "': " + e.what());
  }
}

std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer rational_floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);  // d > 0 canonically
  Integer quot = n / d;
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

std::int64_t to_int64_checked(const Integer& n) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi) {
    throw std::overflow_error("integer does not fit in int64: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace ncdeform
