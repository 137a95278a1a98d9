// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ncdeform {

namespace {

// Quotient of the exact division (num / den) of dense polynomials over Q.
// Throws if the division leaves a remainder; callers only divide products of
// cyclotomic polynomials, which divide exactly.
std::vector<Rational> poly_div_exact(std::vector<Rational> num,
                                     const std::vector<Rational>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (den.empty() || den.back() == 0) throw std::logic_error("division by zero poly");
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return {};
  }
  std::vector<Rational> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational c = num[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const auto& c : num) {
    if (c != 0) throw std::logic_error("inexact polynomial division");
  }
  return quot;
}

// Remainder of num modulo den (den monic-led; cyclotomics are monic).
void poly_mod_inplace(std::vector<Rational>& num,
                      const std::vector<Rational>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  while (num.size() >= den.size()) {
    Rational c = num.back() / den.back();
    const std::size_t off = num.size() - den.size();
    for (std::size_t j = 0; j < den.size(); ++j) num[off + j] -= c * den[j];
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned long n) {
  thread_local std::unordered_map<unsigned long, std::vector<Rational>> cache;
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Rational> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

CycScalar CycScalar::phase(const RationalAngle& a) {
  CycScalar z;
  z.terms_.emplace(a, Rational(1));
  return z;
}

void CycScalar::add_term_(const RationalAngle& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  CycScalar r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term_(a, c);
  return r;
}

CycScalar CycScalar::operator-(const CycScalar& o) const {
  CycScalar r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term_(a, -c);
  return r;
}

CycScalar CycScalar::operator-() const {
  CycScalar r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

CycScalar CycScalar::operator*(const CycScalar& o) const {
  CycScalar r;
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) r.add_term_(a + b, c * d);
  }
  return r;
}

CycScalar CycScalar::scaled(const Rational& c) const {
  CycScalar r;
  if (c == 0) return r;
  for (const auto& [a, k] : terms_) r.terms_.emplace(a, k * c);
  return r;
}

CycScalar conj(const CycScalar& z) {
  CycScalar r;
  for (const auto& [a, c] : z.terms_) r.terms_.emplace(-a, c);
  return r;
}

// Folds the terms into the power basis of Q(zeta_B), B the common angle
// denominator, and reduces modulo Phi_B. The result is the unique coordinate
// vector of the value in that basis.
std::vector<Rational> CycScalar::power_basis_() const {
  Integer big_b = 1;
  for (const auto& [a, c] : terms_) big_b = lcm(big_b, a.denominator());
  if (big_b > 1u << 20) {
    throw std::runtime_error("cyclotomic order too large: " + big_b.str());
  }
  const auto B = big_b.convert_to<unsigned long>();
  std::vector<Rational> poly(B);
  for (const auto& [a, c] : terms_) {
    const Integer k = a.numerator() * (big_b / a.denominator());
    poly[k.convert_to<unsigned long>()] += c;
  }
  poly_mod_inplace(poly, cyclotomic_polynomial(B));
  return poly;
}

bool CycScalar::is_zero() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1) return false;  // a single phase term never vanishes
  return power_basis_().empty();
}

std::optional<Rational> CycScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_zero()) {
    return terms_.begin()->second;
  }
  const auto coords = power_basis_();
  if (coords.empty()) return Rational(0);
  if (coords.size() == 1) return coords[0];
  return std::nullopt;
}

std::pair<double, double> CycScalar::to_complex() const {
  double re = 0, im = 0;
  for (const auto& [a, c] : terms_) {
    const double t = 2.0 * std::numbers::pi * a.turns().convert_to<double>();
    const double k = c.convert_to<double>();
    re += k * std::cos(t);
    im += k * std::sin(t);
  }
  return {re, im};
}

std::string CycScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (a.is_zero()) {
      out << rational_to_string(c);
    } else if (c == 1) {
      out << "e(" << a.to_string() << ")";
    } else {
      out << rational_to_string(c) << "*e(" << a.to_string() << ")";
    }
  }
  return out.str();
}

}  // namespace ncdeform
