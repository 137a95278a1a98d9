// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncdeform/hopf.hpp"

namespace ncdeform {

/// Identifies the invariant subalgebra C(G)^K inside a matrix-coefficient
/// algebra. Invariance is decided by weight bookkeeping: an element is
/// K-invariant when its right degree vanishes and (for stabilizer subgroups)
/// its monomials only involve the distinguished matrix column.
struct KSpec {
  enum class Kind { trivial_group, fixed_column, diagonal_torus };
  Kind kind = Kind::trivial_group;
  int column = 0;

  static KSpec trivial() { return {Kind::trivial_group, 0}; }
  static KSpec fixed_column(int c) { return {Kind::fixed_column, c}; }
  static KSpec diagonal_torus() { return {Kind::diagonal_torus, 0}; }
};

struct InvariantSubalgebra {
  MatrixCoeffAlgebra parent;
  KSpec spec;
  std::vector<int> generators;  // selected parent generators (may be empty)

  bool contains_monomial(const Exponents& mono) const;
  bool contains(const PolyElement& f) const;
  /// Invariant monomials of bounded total degree.
  std::vector<Exponents> monomials(int max_degree) const;
};

/// Selects the K-invariants. For fixed_column the column must carry weight
/// zero, otherwise products of its entries acquire right degree and the
/// selector is not closed; that case throws.
InvariantSubalgebra invariants_of(const MatrixCoeffAlgebra& parent,
                                  const KSpec& k);

/// The quotient-side algebra C(G/K) for a weight-zero column: mono-graded
/// generators, one per column entry, with the left translation degree. The
/// star context collapses from J = Q (+) (-Q) to plain Q.
struct HomogSpace {
  MatrixCoeffAlgebra parent;
  InvariantSubalgebra inv;
  AlgebraPtr alg;
  StarContext ctx;                 // mono, matrix Q
  std::vector<int> parent_gen;     // homog generator -> parent generator

  PolyElement unit() const { return PolyElement::unit(alg); }
  PolyElement gen(int i) const { return PolyElement::generator(alg, i); }
  TensorSlot group_slot() const { return {parent.alg, parent.ctx}; }
  TensorSlot space_slot() const { return {alg, ctx}; }
};

HomogSpace homog_from_column(const MatrixCoeffAlgebra& parent, int column);

/// zeta: C(G)^K -> C(G/K), the degree-preserving *-isomorphism. Throws on
/// non-invariant input.
PolyElement zeta(const HomogSpace& h, const PolyElement& f);
PolyElement zeta_inverse(const HomogSpace& h, const PolyElement& f);

/// Left coaction rho(s_a) = sum_c x_{ac} (x) s_c, extended to monomials in
/// the commutative base. Slots: [group with J-twist, space with Q-twist].
TensorElement coaction(const HomogSpace& h, const PolyElement& f);

/// Pairwise commutation phases c_{ij} with g_i x g_j = c_{ij} (g_j x g_i).
struct RelationTable {
  std::vector<std::string> names;
  std::vector<std::vector<CycScalar>> phase;
  bool operator==(const RelationTable& o) const;
  std::string to_string() const;
};
RelationTable commutation_table(const StarContext& ctx, const AlgebraPtr& alg);

/// Builds C(SO(2l+1))_J, selects the SO(2l)-invariant column, pushes it
/// through zeta, and compares the resulting commutation table with the
/// sphere algebra built from the same theta, generators matched by degree.
struct SphereFromSO {
  HomogSpace space;
  SphereAlgebra sphere;
  std::vector<int> sphere_gen_of_homog;
  RelationTable homog_table;
  RelationTable sphere_table;
  bool tables_match = false;
  bool conjugate_pairs_commute = false;
  bool x_central = false;
};
SphereFromSO sphere_from_so_odd(int l, const DeformMatrix& theta);

}  // namespace ncdeform
