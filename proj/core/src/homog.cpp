// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/homog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncdeform {

bool InvariantSubalgebra::contains_monomial(const Exponents& mono) const {
  switch (spec.kind) {
    case KSpec::Kind::trivial_group:
      return true;
    case KSpec::Kind::diagonal_torus: {
      const LatticeVector q = parent.right_degree(mono);
      return std::all_of(q.begin(), q.end(), [](long x) { return x == 0; });
    }
    case KSpec::Kind::fixed_column: {
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (std::find(generators.begin(), generators.end(),
                      static_cast<int>(i)) == generators.end()) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool InvariantSubalgebra::contains(const PolyElement& f) const {
  if (f.algebra() != parent.alg) return false;
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
    return t.second.is_zero() || contains_monomial(t.first);
  });
}

std::vector<Exponents> InvariantSubalgebra::monomials(int max_degree) const {
  std::vector<Exponents> out;
  for (auto& mono : monomial_basis(parent.alg, max_degree)) {
    if (contains_monomial(mono)) out.push_back(std::move(mono));
  }
  return out;
}

InvariantSubalgebra invariants_of(const MatrixCoeffAlgebra& parent,
                                  const KSpec& k) {
  InvariantSubalgebra inv{parent, k, {}};
  if (k.kind == KSpec::Kind::fixed_column) {
    if (k.column < 0 || k.column >= parent.n) {
      throw std::invalid_argument("fixed column out of range");
    }
    const auto& w = parent.weights.at(k.column);
    if (!std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) {
      // entries of a nonzero-weight column pick up right degree under
      // products, so the selector would not be closed under the product
      throw std::invalid_argument(
          "selector not closed under products: column weight is nonzero");
    }
    for (int a = 0; a < parent.n; ++a) {
      inv.generators.push_back(parent.u_index(a, k.column));
    }
    // closed under the involution as well: conjugation permutes the column
    for (int g : inv.generators) {
      const int partner = parent.alg->gen(g).conj_partner;
      if (std::find(inv.generators.begin(), inv.generators.end(), partner) ==
          inv.generators.end()) {
        throw std::invalid_argument("selector not closed under involution");
      }
    }
  }
  return inv;
}

HomogSpace homog_from_column(const MatrixCoeffAlgebra& parent, int column) {
  HomogSpace h;
  h.parent = parent;
  h.inv = invariants_of(parent, KSpec::fixed_column(column));
  h.parent_gen = h.inv.generators;

  std::vector<int> homog_of_parent(parent.alg->size(), -1);
  for (std::size_t i = 0; i < h.parent_gen.size(); ++i) {
    homog_of_parent[h.parent_gen[i]] = static_cast<int>(i);
  }

  std::vector<GeneratorInfo> gens;
  for (std::size_t i = 0; i < h.parent_gen.size(); ++i) {
    const auto& pg = parent.alg->gen(h.parent_gen[i]);
    const int partner = homog_of_parent[pg.conj_partner];
    Exponents probe(parent.alg->size(), 0);
    probe[h.parent_gen[i]] = 1;
    gens.push_back({"z[" + pg.name + "]", parent.left_degree(probe), partner});
  }
  h.alg = std::make_shared<GradedAlgebra>(parent.alg->name() + "/K", parent.l,
                                          std::move(gens));
  h.ctx = StarContext::mono(parent.Q);
  return h;
}

PolyElement zeta(const HomogSpace& h, const PolyElement& f) {
  if (f.algebra() != h.parent.alg) {
    throw std::invalid_argument("zeta: element over wrong algebra");
  }
  if (!h.inv.contains(f)) {
    throw std::invalid_argument("zeta: element is not K-invariant");
  }
  std::vector<int> homog_of_parent(h.parent.alg->size(), -1);
  for (std::size_t i = 0; i < h.parent_gen.size(); ++i) {
    homog_of_parent[h.parent_gen[i]] = static_cast<int>(i);
  }
  PolyElement out(h.alg);
  for (const auto& [e, c] : f.terms()) {
    if (c.is_zero()) continue;
    Exponents mono(h.alg->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) mono[homog_of_parent[i]] = e[i];
    }
    out.add_term(mono, c);
  }
  return out;
}

PolyElement zeta_inverse(const HomogSpace& h, const PolyElement& f) {
  if (f.algebra() != h.alg) {
    throw std::invalid_argument("zeta_inverse: element over wrong algebra");
  }
  PolyElement out(h.parent.alg);
  for (const auto& [e, c] : f.terms()) {
    Exponents mono(h.parent.alg->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) mono[h.parent_gen[i]] = e[i];
    }
    out.add_term(mono, c);
  }
  return out;
}

TensorElement coaction(const HomogSpace& h, const PolyElement& f) {
  if (h.parent.alg == nullptr) {
    throw std::invalid_argument("coaction: no parent group attached");
  }
  if (f.algebra() != h.alg) {
    throw std::invalid_argument("coaction: element over wrong algebra");
  }
  const std::vector<TensorSlot> slots{h.group_slot(), h.space_slot()};
  // the column index of the invariant generators
  std::vector<int> homog_of_parent(h.parent.alg->size(), -1);
  for (std::size_t i = 0; i < h.parent_gen.size(); ++i) {
    homog_of_parent[h.parent_gen[i]] = static_cast<int>(i);
  }

  auto coaction_gen = [&](int i) {
    TensorElement t(slots);
    const auto& meta = h.parent.meta.at(h.parent_gen[i]);
    for (int c = 0; c < h.parent.n; ++c) {
      Exponents group_mono(h.parent.alg->size(), 0);
      group_mono[h.parent.u_index(meta.row, c)] = 1;
      Exponents space_mono(h.alg->size(), 0);
      space_mono[homog_of_parent[h.parent.u_index(c, h.inv.spec.column)]] = 1;
      t.add_term({group_mono, space_mono}, CycScalar(1));
    }
    return t;
  };

  TensorElement out(slots);
  for (const auto& [e, c] : f.terms()) {
    TensorElement acc = TensorElement::unit(slots);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) {
        // commutative tensor product, matching the commutative extension of
        // the coproduct
        const TensorElement gi = coaction_gen(static_cast<int>(i));
        TensorElement next(slots);
        for (const auto& [m1, c1] : acc.terms()) {
          for (const auto& [m2, c2] : gi.terms()) {
            std::vector<Exponents> mono(m1.size());
            for (std::size_t s = 0; s < m1.size(); ++s) {
              mono[s].resize(m1[s].size());
              for (std::size_t q = 0; q < mono[s].size(); ++q) {
                mono[s][q] = m1[s][q] + m2[s][q];
              }
            }
            next.add_term(mono, c1 * c2);
          }
        }
        acc = std::move(next);
      }
    }
    out = out + acc.scaled(c);
  }
  return out;
}

bool RelationTable::operator==(const RelationTable& o) const {
  if (phase.size() != o.phase.size()) return false;
  for (std::size_t i = 0; i < phase.size(); ++i) {
    if (phase[i].size() != o.phase[i].size()) return false;
    for (std::size_t j = 0; j < phase[i].size(); ++j) {
      if (phase[i][j] != o.phase[i][j]) return false;
    }
  }
  return true;
}

std::string RelationTable::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < phase.size(); ++i) {
    for (std::size_t j = i + 1; j < phase[i].size(); ++j) {
      out << names[i] << " x " << names[j] << " = (" << phase[i][j].to_string()
          << ") " << names[j] << " x " << names[i] << "\n";
    }
  }
  return out.str();
}

RelationTable commutation_table(const StarContext& ctx, const AlgebraPtr& alg) {
  RelationTable t;
  const int n = alg->size();
  t.phase.assign(n, std::vector<CycScalar>(n, CycScalar(1)));
  for (int i = 0; i < n; ++i) t.names.push_back(alg->gen(i).name);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& di = alg->gen(i).degree;
      const auto& dj = alg->gen(j).degree;
      t.phase[i][j] = ctx.twist(di, dj) * conj(ctx.twist(dj, di));
    }
  }
  return t;
}

SphereFromSO sphere_from_so_odd(int l, const DeformMatrix& theta) {
  SphereFromSO out;
  const MatrixCoeffAlgebra so = make_group_so_odd(l, theta);
  out.space = homog_from_column(so, 0);
  out.sphere = make_sphere_algebra(theta);

  // match generators by degree
  const int gens = out.space.alg->size();
  out.sphere_gen_of_homog.assign(gens, -1);
  for (int i = 0; i < gens; ++i) {
    const auto& d = out.space.alg->gen(i).degree;
    for (int j = 0; j < out.sphere.alg->size(); ++j) {
      if (out.sphere.alg->gen(j).degree == d) {
        out.sphere_gen_of_homog[i] = j;
        break;
      }
    }
    if (out.sphere_gen_of_homog[i] < 0) {
      throw std::logic_error("no sphere generator of matching degree");
    }
  }

  out.homog_table = commutation_table(out.space.ctx, out.space.alg);
  out.sphere_table = commutation_table(out.sphere.ctx, out.sphere.alg);

  out.tables_match = true;
  for (int i = 0; i < gens && out.tables_match; ++i) {
    for (int j = 0; j < gens && out.tables_match; ++j) {
      out.tables_match =
          (out.homog_table.phase[i][j] ==
           out.sphere_table.phase[out.sphere_gen_of_homog[i]]
                                 [out.sphere_gen_of_homog[j]]);
    }
  }

  out.conjugate_pairs_commute = true;
  for (int i = 0; i < gens; ++i) {
    const int partner = out.space.alg->gen(i).conj_partner;
    if (!(out.homog_table.phase[i][partner] == CycScalar(1))) {
      out.conjugate_pairs_commute = false;
    }
  }

  out.x_central = true;
  for (int i = 0; i < gens; ++i) {
    const auto& d = out.space.alg->gen(i).degree;
    const bool zero_degree =
        std::all_of(d.begin(), d.end(), [](long x) { return x == 0; });
    if (!zero_degree) continue;
    for (int j = 0; j < gens; ++j) {
      if (!(out.homog_table.phase[i][j] == CycScalar(1))) out.x_central = false;
    }
  }
  return out;
}

}  // namespace ncdeform
