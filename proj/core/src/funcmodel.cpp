// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/funcmodel.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ncdeform {

namespace {

// ---- U(2): numerator polynomial in z11,z12,z21,z22 plus a det power ------

using Mono4 = std::array<int, 4>;
using Poly4 = std::map<Mono4, CycScalar>;

void poly_add(Poly4& p, const Mono4& m, const CycScalar& c) {
  if (c.term_count() == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.term_count() == 0) p.erase(it);
  }
}

Poly4 poly_mul(const Poly4& a, const Poly4& b) {
  Poly4 r;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      poly_add(r, {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3]},
               c1 * c2);
    }
  }
  return r;
}

bool poly_zero(const Poly4& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

// det = z11 z22 - z12 z21
Poly4 det_poly() {
  Poly4 d;
  poly_add(d, {1, 0, 0, 1}, CycScalar(1));
  poly_add(d, {0, 1, 1, 0}, CycScalar(-1));
  return d;
}

struct Frac4 {
  Poly4 num;
  int det_pow = 0;
};

// image of one generator of C(U(2))
Frac4 u2_generator_image(const MatrixCoeffAlgebra& g, int gen) {
  const auto& m = g.meta.at(gen);
  Frac4 out;
  if (!m.starred) {
    Mono4 e{0, 0, 0, 0};
    e[m.row * 2 + m.col] = 1;
    poly_add(out.num, e, CycScalar(1));
    return out;
  }
  // conj(u_{ab}) = (u^{-1})_{ba} = adj_{ba} / det = (-1)^{a+b} z_{1-a,1-b} / det
  out.det_pow = 1;
  const int a = m.row, b = m.col;
  static const Mono4 var[2][2] = {{{1, 0, 0, 0}, {0, 1, 0, 0}},
                                  {{0, 0, 1, 0}, {0, 0, 0, 1}}};
  poly_add(out.num, var[1 - a][1 - b], CycScalar(a != b ? -1 : 1));
  return out;
}

Frac4 u2_monomial_image(const MatrixCoeffAlgebra& g, const Exponents& mono) {
  Frac4 acc;
  poly_add(acc.num, {0, 0, 0, 0}, CycScalar(1));
  for (std::size_t i = 0; i < mono.size(); ++i) {
    for (int k = 0; k < mono[i]; ++k) {
      const Frac4 gi = u2_generator_image(g, static_cast<int>(i));
      acc.num = poly_mul(acc.num, gi.num);
      acc.det_pow += gi.det_pow;
    }
  }
  return acc;
}

Poly4 det_power(int k) {
  Poly4 acc;
  poly_add(acc, {0, 0, 0, 0}, CycScalar(1));
  const Poly4 d = det_poly();
  for (int i = 0; i < k; ++i) acc = poly_mul(acc, d);
  return acc;
}

bool u2_is_zero(const MatrixCoeffAlgebra& g, const PolyElement& f) {
  // bring all terms over the common power of det and compare numerators;
  // det is not a zero divisor, so this is exact
  int max_pow = 0;
  std::vector<std::pair<Frac4, CycScalar>> images;
  for (const auto& [e, c] : f.terms()) {
    images.emplace_back(u2_monomial_image(g, e), c);
    max_pow = std::max(max_pow, images.back().first.det_pow);
  }
  Poly4 total;
  for (const auto& [frac, c] : images) {
    Poly4 scaled = poly_mul(frac.num, det_power(max_pow - frac.det_pow));
    for (const auto& [m, k] : scaled) poly_add(total, m, k * c);
  }
  return poly_zero(total);
}

bool u2_tensor_is_zero(const MatrixCoeffAlgebra& g, const TensorElement& t) {
  const int slots = t.slot_count();
  std::vector<int> max_pow(slots, 0);
  struct Term {
    std::vector<Frac4> fracs;
    CycScalar coeff;
  };
  std::vector<Term> terms;
  for (const auto& [m, c] : t.terms()) {
    Term term;
    term.coeff = c;
    for (int s = 0; s < slots; ++s) {
      term.fracs.push_back(u2_monomial_image(g, m[s]));
      max_pow[s] = std::max(max_pow[s], term.fracs.back().det_pow);
    }
    terms.push_back(std::move(term));
  }
  std::map<std::vector<Mono4>, CycScalar> total;
  for (const auto& term : terms) {
    // expand the product of slot numerators (each raised to the common det
    // power) into flat keys
    std::vector<Poly4> nums;
    for (int s = 0; s < slots; ++s) {
      nums.push_back(poly_mul(term.fracs[s].num,
                              det_power(max_pow[s] - term.fracs[s].det_pow)));
    }
    std::vector<std::pair<std::vector<Mono4>, CycScalar>> expansion{
        {{}, term.coeff}};
    for (const auto& num : nums) {
      std::vector<std::pair<std::vector<Mono4>, CycScalar>> next;
      for (const auto& [key, c] : expansion) {
        for (const auto& [m, k] : num) {
          auto key2 = key;
          key2.push_back(m);
          next.emplace_back(std::move(key2), c * k);
        }
      }
      expansion = std::move(next);
    }
    for (const auto& [key, c] : expansion) {
      if (c.term_count() == 0) continue;
      auto [it, inserted] = total.emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  return std::all_of(total.begin(), total.end(),
                     [](const auto& t2) { return t2.second.is_zero(); });
}

// ---- T^l: Laurent polynomials in the diagonal entries --------------------

LatticeVector torus_monomial_image(const MatrixCoeffAlgebra& g,
                                   const Exponents& mono) {
  LatticeVector v(g.l, 0);
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    const auto& m = g.meta[i];
    v[m.row] += m.starred ? -mono[i] : mono[i];
  }
  return v;
}

bool torus_is_zero(const MatrixCoeffAlgebra& g, const PolyElement& f) {
  std::map<LatticeVector, CycScalar> acc;
  for (const auto& [e, c] : f.terms()) {
    auto [it, inserted] = acc.emplace(torus_monomial_image(g, e), c);
    if (!inserted) it->second += c;
  }
  return std::all_of(acc.begin(), acc.end(),
                     [](const auto& t) { return t.second.is_zero(); });
}

bool torus_tensor_is_zero(const MatrixCoeffAlgebra& g, const TensorElement& t) {
  std::map<std::vector<LatticeVector>, CycScalar> acc;
  for (const auto& [m, c] : t.terms()) {
    std::vector<LatticeVector> key;
    key.reserve(m.size());
    for (const auto& mono : m) key.push_back(torus_monomial_image(g, mono));
    auto [it, inserted] = acc.emplace(std::move(key), c);
    if (!inserted) it->second += c;
  }
  return std::all_of(acc.begin(), acc.end(),
                     [](const auto& t2) { return t2.second.is_zero(); });
}

}  // namespace

FunctionModel::FunctionModel(const MatrixCoeffAlgebra& g) : g_(&g) {
  if (g.kind == GroupKind::unitary && g.n != 2) {
    throw std::invalid_argument("function model: only U(2) is supported");
  }
  if (g.kind == GroupKind::orthogonal_weight) {
    throw std::invalid_argument(
        "function model: no relation model for the orthogonal weight basis");
  }
}

bool FunctionModel::is_zero(const PolyElement& f) const {
  if (f.algebra() != g_->alg) {
    throw std::invalid_argument("element over wrong algebra");
  }
  return g_->kind == GroupKind::unitary ? u2_is_zero(*g_, f)
                                        : torus_is_zero(*g_, f);
}

bool FunctionModel::tensor_is_zero(const TensorElement& t) const {
  for (const auto& slot : t.slots()) {
    if (slot.alg != g_->alg) {
      throw std::invalid_argument("tensor slot over wrong algebra");
    }
  }
  return g_->kind == GroupKind::unitary ? u2_tensor_is_zero(*g_, t)
                                        : torus_tensor_is_zero(*g_, t);
}

}  // namespace ncdeform
