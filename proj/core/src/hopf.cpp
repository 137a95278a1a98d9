// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/hopf.hpp"

#include <stdexcept>

namespace ncdeform {

namespace {

LatticeVector basis_vector(int l, int i) {
  LatticeVector e(l, 0);
  e[i] = 1;
  return e;
}

LatticeVector bidegree(const LatticeVector& left, const LatticeVector& right) {
  LatticeVector d = left;
  d.insert(d.end(), right.begin(), right.end());
  return d;
}

// Commutative product on tensors: slotwise exponent sums, no twist.
TensorElement tensor_commutative_mul(const TensorElement& a,
                                     const TensorElement& b) {
  TensorElement r(a.slots());
  for (const auto& [m1, c1] : a.terms()) {
    for (const auto& [m2, c2] : b.terms()) {
      std::vector<Exponents> mono(m1.size());
      for (std::size_t s = 0; s < m1.size(); ++s) {
        mono[s].resize(m1[s].size());
        for (std::size_t i = 0; i < mono[s].size(); ++i) {
          mono[s][i] = m1[s][i] + m2[s][i];
        }
      }
      r.add_term(mono, c1 * c2);
    }
  }
  return r;
}

}  // namespace

int MatrixCoeffAlgebra::u_index(int a, int b) const {
  switch (kind) {
    case GroupKind::torus_diagonal:
      if (a != b) throw std::invalid_argument("torus entries are diagonal");
      return a;
    case GroupKind::unitary:
    case GroupKind::orthogonal_weight:
      return a * n + b;
  }
  throw std::logic_error("unreachable");
}

int MatrixCoeffAlgebra::ustar_index(int a, int b) const {
  switch (kind) {
    case GroupKind::torus_diagonal:
      if (a != b) throw std::invalid_argument("torus entries are diagonal");
      return n + a;
    case GroupKind::unitary:
      return n * n + a * n + b;
    case GroupKind::orthogonal_weight:
      // conjugation permutes the real entries: conj(x_{ab}) = x_{pa(a) pa(b)}
      return alg->gen(u_index(a, b)).conj_partner;
  }
  throw std::logic_error("unreachable");
}

LatticeVector MatrixCoeffAlgebra::left_degree(const Exponents& mono) const {
  const LatticeVector d = alg->monomial_degree(mono);
  return LatticeVector(d.begin(), d.begin() + l);
}

LatticeVector MatrixCoeffAlgebra::right_degree(const Exponents& mono) const {
  const LatticeVector d = alg->monomial_degree(mono);
  return LatticeVector(d.begin() + l, d.end());
}

MatrixCoeffAlgebra make_group_torus(int l, const DeformMatrix& theta) {
  if (theta.rank() != l) throw std::invalid_argument("theta rank != l");
  MatrixCoeffAlgebra g;
  g.kind = GroupKind::torus_diagonal;
  g.n = l;
  g.l = l;
  g.Q = theta.half();
  g.ctx = StarContext::doubled(g.Q);
  for (int a = 0; a < l; ++a) g.weights.push_back(basis_vector(l, a));

  std::vector<GeneratorInfo> gens;
  for (int a = 0; a < l; ++a) {
    const auto ea = basis_vector(l, a);
    gens.push_back({"U" + std::to_string(a + 1), bidegree(negate(ea), ea),
                    l + a});
    g.meta.push_back({a, a, false});
  }
  for (int a = 0; a < l; ++a) {
    const auto ea = basis_vector(l, a);
    gens.push_back({"U" + std::to_string(a + 1) + "*",
                    bidegree(ea, negate(ea)), a});
    g.meta.push_back({a, a, true});
  }
  g.alg = std::make_shared<GradedAlgebra>("C(T" + std::to_string(l) + ")",
                                          2 * l, std::move(gens));
  return g;
}

MatrixCoeffAlgebra make_group_unitary(int n, const DeformMatrix& theta) {
  if (theta.rank() != n) {
    throw std::invalid_argument("theta rank must equal n for U(n)");
  }
  MatrixCoeffAlgebra g;
  g.kind = GroupKind::unitary;
  g.n = n;
  g.l = n;
  g.Q = theta.half();
  g.ctx = StarContext::doubled(g.Q);
  for (int a = 0; a < n; ++a) g.weights.push_back(basis_vector(n, a));

  std::vector<GeneratorInfo> gens;
  auto entry_name = [](int a, int b) {
    return "u" + std::to_string(a + 1) + std::to_string(b + 1);
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      gens.push_back({entry_name(a, b),
                      bidegree(negate(g.weights[a]), g.weights[b]),
                      n * n + a * n + b});
      g.meta.push_back({a, b, false});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      gens.push_back({entry_name(a, b) + "*",
                      bidegree(g.weights[a], negate(g.weights[b])),
                      a * n + b});
      g.meta.push_back({a, b, true});
    }
  }
  g.alg = std::make_shared<GradedAlgebra>("C(U(" + std::to_string(n) + "))",
                                          2 * n, std::move(gens));
  return g;
}

MatrixCoeffAlgebra make_group_so_odd(int l, const DeformMatrix& theta) {
  if (theta.rank() != l) throw std::invalid_argument("theta rank != l");
  MatrixCoeffAlgebra g;
  g.kind = GroupKind::orthogonal_weight;
  g.n = 2 * l + 1;
  g.l = l;
  g.Q = theta.half();
  g.ctx = StarContext::doubled(g.Q);

  // weight basis: index 0 carries weight zero, then e_i / -e_i pairs
  g.weights.assign(g.n, LatticeVector(l, 0));
  std::vector<int> weight_partner(g.n, 0);
  for (int i = 0; i < l; ++i) {
    g.weights[2 * i + 1] = basis_vector(l, i);
    g.weights[2 * i + 2] = negate(basis_vector(l, i));
    weight_partner[2 * i + 1] = 2 * i + 2;
    weight_partner[2 * i + 2] = 2 * i + 1;
  }

  std::vector<GeneratorInfo> gens;
  for (int a = 0; a < g.n; ++a) {
    for (int b = 0; b < g.n; ++b) {
      gens.push_back({"x" + std::to_string(a) + std::to_string(b),
                      bidegree(negate(g.weights[a]), g.weights[b]),
                      weight_partner[a] * g.n + weight_partner[b]});
      g.meta.push_back({a, b, false});
    }
  }
  g.alg = std::make_shared<GradedAlgebra>(
      "C(SO(" + std::to_string(2 * l + 1) + "))", 2 * l, std::move(gens));
  return g;
}

namespace {

// Delta of a single generator.
TensorElement coproduct_generator(const MatrixCoeffAlgebra& g, int gen) {
  TensorElement t(g.slots(2));
  const auto& m = g.meta.at(gen);
  if (g.kind == GroupKind::torus_diagonal) {
    Exponents e(g.alg->size(), 0);
    e[gen] = 1;
    t.add_term({e, e}, CycScalar(1));
    return t;
  }
  for (int c = 0; c < g.n; ++c) {
    const int leftg = m.starred ? g.ustar_index(m.row, c) : g.u_index(m.row, c);
    const int rightg = m.starred ? g.ustar_index(c, m.col) : g.u_index(c, m.col);
    Exponents el(g.alg->size(), 0), er(g.alg->size(), 0);
    el[leftg] = 1;
    er[rightg] = 1;
    t.add_term({el, er}, CycScalar(1));
  }
  return t;
}

TensorElement coproduct_monomial(const MatrixCoeffAlgebra& g,
                                 const Exponents& mono) {
  TensorElement acc = TensorElement::unit(g.slots(2));
  for (std::size_t i = 0; i < mono.size(); ++i) {
    for (int k = 0; k < mono[i]; ++k) {
      acc = tensor_commutative_mul(acc,
                                   coproduct_generator(g, static_cast<int>(i)));
    }
  }
  return acc;
}

Exponents antipode_monomial(const MatrixCoeffAlgebra& g, const Exponents& e) {
  Exponents out(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const auto& m = g.meta.at(i);
    const int image = m.starred ? g.u_index(m.col, m.row)
                                : g.ustar_index(m.col, m.row);
    out[image] += e[i];
  }
  return out;
}

}  // namespace

TensorElement coproduct(const MatrixCoeffAlgebra& g, const PolyElement& f) {
  if (f.algebra() != g.alg) {
    throw std::invalid_argument(
        "element is not expressible in this group's matrix coefficients");
  }
  TensorElement out(g.slots(2));
  for (const auto& [e, c] : f.terms()) {
    out = out + coproduct_monomial(g, e).scaled(c);
  }
  return out;
}

CycScalar counit(const MatrixCoeffAlgebra& g, const PolyElement& f) {
  if (f.algebra() != g.alg) {
    throw std::invalid_argument(
        "element is not expressible in this group's matrix coefficients");
  }
  CycScalar out;
  for (const auto& [e, c] : f.terms()) {
    bool diagonal = true;
    for (std::size_t i = 0; i < e.size() && diagonal; ++i) {
      if (e[i] != 0 && g.meta[i].row != g.meta[i].col) diagonal = false;
    }
    if (diagonal) out += c;
  }
  return out;
}

PolyElement antipode(const MatrixCoeffAlgebra& g, const PolyElement& f) {
  if (!g.has_antipode()) {
    throw std::invalid_argument("algebra carries no antipode convention");
  }
  if (f.algebra() != g.alg) {
    throw std::invalid_argument("element over wrong algebra");
  }
  PolyElement out(g.alg);
  for (const auto& [e, c] : f.terms()) out.add_term(antipode_monomial(g, e), c);
  return out;
}

PolyElement multiply_tensor(const MatrixCoeffAlgebra& g,
                            const TensorElement& h) {
  if (h.slot_count() != 2) throw std::invalid_argument("need a 2-tensor");
  PolyElement out(g.alg);
  for (const auto& [m, c] : h.terms()) {
    const PolyElement prod =
        star_product(g.ctx, PolyElement::monomial(g.alg, m[0]),
                     PolyElement::monomial(g.alg, m[1]));
    out = out + prod.scaled(c);
  }
  return out;
}

TensorElement coproduct_on_slot(const MatrixCoeffAlgebra& g,
                                const TensorElement& h, int slot) {
  return h.expand_slot(slot, g.slots(2), [&](const Exponents& mono) {
    return coproduct_monomial(g, mono);
  });
}

TensorElement antipode_on_slot(const MatrixCoeffAlgebra& g,
                               const TensorElement& h, int slot) {
  if (!g.has_antipode()) {
    throw std::invalid_argument("algebra carries no antipode convention");
  }
  return h.map_slot(slot, g.slot(), [&](const Exponents& mono) {
    return PolyElement::monomial(g.alg, antipode_monomial(g, mono));
  });
}

TensorElement outer2(const MatrixCoeffAlgebra& g, const PolyElement& f,
                     const PolyElement& h) {
  return TensorElement::outer(g.slot(), g.slot(), f, h);
}

TensorElement fundamental_w(const MatrixCoeffAlgebra& g, const TensorElement& h,
                            WVariant variant) {
  if (h.slot_count() != 2) throw std::invalid_argument("need a 2-tensor");
  TensorElement out(g.slots(2));
  for (const auto& [m, c] : h.terms()) {
    const PolyElement f0 = PolyElement::monomial(g.alg, m[0]);
    const PolyElement f1 = PolyElement::monomial(g.alg, m[1]);
    TensorElement piece(g.slots(2));
    if (variant == WVariant::w) {
      piece = coproduct(g, f0).star(outer2(g, g.unit(), f1));
    } else {
      piece = outer2(g, f0, g.unit()).star(coproduct(g, f1));
    }
    out = out + piece.scaled(c);
  }
  return out;
}

TensorElement fundamental_w_inverse(const MatrixCoeffAlgebra& g,
                                    const TensorElement& h, WVariant variant) {
  if (h.slot_count() != 2) throw std::invalid_argument("need a 2-tensor");
  TensorElement out(g.slots(2));
  for (const auto& [m, c] : h.terms()) {
    const PolyElement f0 = PolyElement::monomial(g.alg, m[0]);
    const PolyElement f1 = PolyElement::monomial(g.alg, m[1]);
    TensorElement piece(g.slots(2));
    if (variant == WVariant::w) {
      piece = antipode_on_slot(g, coproduct(g, f0), 1)
                  .star(outer2(g, g.unit(), f1));
    } else {
      piece = outer2(g, f0, g.unit())
                  .star(antipode_on_slot(g, coproduct(g, f1), 0));
    }
    out = out + piece.scaled(c);
  }
  return out;
}

std::vector<Exponents> monomial_basis(const AlgebraPtr& alg, int max_degree) {
  std::vector<Exponents> basis;
  Exponents cur(alg->size(), 0);
  // lexicographic enumeration of exponent vectors with bounded total degree
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == alg->size()) {
      basis.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      rec(pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(0, max_degree);
  return basis;
}

}  // namespace ncdeform
