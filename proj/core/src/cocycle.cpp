// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/cocycle.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace ncdeform {

DeformMatrix::DeformMatrix(int rank, std::vector<Rational> row_major)
    : rank_(rank), a_(std::move(row_major)) {
  if (rank_ < 1 || a_.size() != static_cast<std::size_t>(rank_) * rank_) {
    throw std::invalid_argument("deformation matrix: bad shape");
  }
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (at(i, j) != -at(j, i)) {
        throw std::invalid_argument("deformation matrix must be skewsymmetric");
      }
    }
  }
}

DeformMatrix DeformMatrix::zero(int rank) {
  return DeformMatrix(rank, std::vector<Rational>(
                                static_cast<std::size_t>(rank) * rank));
}

DeformMatrix DeformMatrix::pair(const Rational& t) {
  return DeformMatrix(2, {0, t, -t, 0});
}

DeformMatrix DeformMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Rational> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("deformation matrix must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return DeformMatrix(n, std::move(flat));
}

DeformMatrix DeformMatrix::operator+(const DeformMatrix& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<Rational> sum(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) sum[i] = a_[i] + o.a_[i];
  return DeformMatrix(rank_, std::move(sum));
}

DeformMatrix DeformMatrix::operator-() const { return scaled(Rational(-1)); }

DeformMatrix DeformMatrix::scaled(const Rational& c) const {
  std::vector<Rational> s(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) s[i] = a_[i] * c;
  return DeformMatrix(rank_, std::move(s));
}

std::string DeformMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rank_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < rank_; ++j) {
      out << (j ? "," : "") << rational_to_string(at(i, j));
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

DoubledMatrix::DoubledMatrix(const DeformMatrix& q) : half_rank_(q.rank()) {
  const int l = q.rank();
  std::vector<Rational> blocks(static_cast<std::size_t>(2 * l) * (2 * l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      blocks[static_cast<std::size_t>(i) * 2 * l + j] = q.at(i, j);
      blocks[static_cast<std::size_t>(i + l) * 2 * l + (j + l)] = -q.at(i, j);
    }
  }
  j_ = DeformMatrix(2 * l, std::move(blocks));
}

namespace {
void require_rank(const DeformMatrix& theta, std::span<const long> r,
                  std::span<const long> s) {
  if (static_cast<int>(r.size()) != theta.rank() ||
      static_cast<int>(s.size()) != theta.rank()) {
    throw std::invalid_argument("lattice vector length does not match rank");
  }
}
}  // namespace

Rational bilinear_form(const DeformMatrix& theta, std::span<const long> r,
                       std::span<const long> s) {
  require_rank(theta, r, s);
  Rational acc = 0;
  for (int j = 0; j < theta.rank(); ++j) {
    if (r[j] == 0) continue;
    for (int k = 0; k < theta.rank(); ++k) {
      if (s[k] == 0) continue;
      acc += Rational(r[j]) * theta.at(j, k) * Rational(s[k]);
    }
  }
  return acc;
}

Rational upper_form(const DeformMatrix& theta, std::span<const long> r,
                    std::span<const long> s) {
  require_rank(theta, r, s);
  Rational acc = 0;
  for (int j = 0; j < theta.rank(); ++j) {
    for (int k = j + 1; k < theta.rank(); ++k) {
      if (r[j] == 0 || s[k] == 0) continue;
      acc += Rational(r[j]) * theta.at(j, k) * Rational(s[k]);
    }
  }
  return acc;
}

CycScalar rho(const DeformMatrix& theta, std::span<const long> r,
              std::span<const long> s) {
  return CycScalar::phase(RationalAngle(-upper_form(theta, r, s)));
}

CycScalar sigma(const DeformMatrix& theta, std::span<const long> r,
                std::span<const long> s) {
  return CycScalar::phase(
      RationalAngle(-bilinear_form(theta, r, s) / 2));
}

CycScalar coboundary_between(const DeformMatrix& theta,
                             std::span<const long> r) {
  return CycScalar::phase(RationalAngle(upper_form(theta, r, r) / 2));
}

CocycleCheckReport check_cocycle(
    const CocycleFn& c,
    const std::vector<std::array<LatticeVector, 3>>& triples) {
  CocycleCheckReport report;
  for (const auto& [r, s, t] : triples) {
    ++report.checked;
    const CycScalar lhs = c(r, add(s, t)) * c(s, t);
    const CycScalar rhs = c(r, s) * c(add(r, s), t);
    if (lhs != rhs) {
      report.ok = false;
      std::ostringstream out;
      auto vec = [](const LatticeVector& v) {
        std::string o = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
          o += (i ? "," : "") + std::to_string(v[i]);
        }
        return o + ")";
      };
      out << "cocycle identity fails at r=" << vec(r) << " s=" << vec(s)
          << " t=" << vec(t) << ": lhs=" << lhs.to_string()
          << " rhs=" << rhs.to_string();
      report.first_failure = out.str();
      return report;
    }
  }
  return report;
}

DeformMatrix parse_theta_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c) {
      throw std::invalid_argument("theta matrix: expected '" +
                                  std::string(1, c) + "' at position " +
                                  std::to_string(i));
    }
    ++i;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<Rational> row;
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
      row.push_back(parse_rational(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("theta matrix: trailing input");
  return DeformMatrix::from_rows(rows);
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice vector length mismatch");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector negate(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace ncdeform
