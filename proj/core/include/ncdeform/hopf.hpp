// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncdeform/tensor.hpp"

namespace ncdeform {

enum class GroupKind { torus_diagonal, unitary, orthogonal_weight };

/// Matrix-coefficient algebra of a compact group carrying a torus bidegree:
/// the generator for the (a,b) entry of the defining representation has
/// bidegree (-w_a, w_b), so the left-right translation action reads off the
/// exponents directly. The twisted product uses J = Q (+) (-Q).
///
/// Three flavours are supported at desk scale:
///   torus_diagonal    diagonal entries U_a of T^l (plus conjugates),
///   unitary           full u_{ab} and u*_{ab} for U(n) (weights e_a),
///   orthogonal_weight entries of SO(2l+1) in the weight basis
///                     (weights 0, e_1, -e_1, ..., e_l, -e_l); conjugation
///                     permutes entries, and no antipode is defined here.
struct MatrixCoeffAlgebra {
  GroupKind kind = GroupKind::unitary;
  int n = 0;  // size of the defining representation
  int l = 0;  // torus rank
  std::vector<LatticeVector> weights;
  DeformMatrix Q;
  StarContext ctx;  // bigraded, rank 2l
  AlgebraPtr alg;

  struct GenMeta {
    int row, col;
    bool starred;
  };
  std::vector<GenMeta> meta;  // parallel to alg generator indices

  int u_index(int a, int b) const;
  int ustar_index(int a, int b) const;
  bool has_antipode() const { return kind != GroupKind::orthogonal_weight; }

  PolyElement unit() const { return PolyElement::unit(alg); }
  PolyElement u(int a, int b) const {
    return PolyElement::generator(alg, u_index(a, b));
  }
  PolyElement u_star(int a, int b) const {
    return PolyElement::generator(alg, ustar_index(a, b));
  }

  TensorSlot slot() const { return {alg, ctx}; }
  std::vector<TensorSlot> slots(int k) const {
    return std::vector<TensorSlot>(static_cast<std::size_t>(k), slot());
  }

  /// Left bidegree component (first l entries).
  LatticeVector left_degree(const Exponents& mono) const;
  /// Right bidegree component (last l entries).
  LatticeVector right_degree(const Exponents& mono) const;
};

/// The group T^l with Q = theta/2; entries U_a, bidegree (-e_a, e_a).
MatrixCoeffAlgebra make_group_torus(int l, const DeformMatrix& theta);
/// U(n) with the diagonal maximal torus, weights e_1..e_n, Q = theta/2.
MatrixCoeffAlgebra make_group_unitary(int n, const DeformMatrix& theta);
/// SO(2l+1) entries in the weight basis, Q = theta/2. Column/row index 0
/// carries weight zero (the vector fixed by SO(2l)).
MatrixCoeffAlgebra make_group_so_odd(int l, const DeformMatrix& theta);

/// Delta u_{ab} = sum_c u_{ac} (x) u_{cb}, extended to the commutative
/// monomial basis as a ring map into the commutative tensor algebra. That
/// this extension is multiplicative for the twisted products — i.e.
/// Delta(f x_J g) = Delta f x_{J(+)J} Delta g — is a verified property,
/// not an assumption.
TensorElement coproduct(const MatrixCoeffAlgebra& g, const PolyElement& f);

/// eps(u_{ab}) = delta_{ab}, extended multiplicatively.
CycScalar counit(const MatrixCoeffAlgebra& g, const PolyElement& f);

/// S(u_{ab}) = u*_{ba}; linear, bidegree-swapping, S^2 = id. Throws for
/// algebras without an inverse rule (the orthogonal weight basis).
PolyElement antipode(const MatrixCoeffAlgebra& g, const PolyElement& f);

/// m(f (x) g) = f x_J g applied to a two-slot tensor.
PolyElement multiply_tensor(const MatrixCoeffAlgebra& g,
                            const TensorElement& h);

/// (Delta (x) id) or (id (x) Delta) on a two-slot tensor.
TensorElement coproduct_on_slot(const MatrixCoeffAlgebra& g,
                                const TensorElement& h, int slot);

/// id (x) S or S (x) id on a two-slot tensor.
TensorElement antipode_on_slot(const MatrixCoeffAlgebra& g,
                               const TensorElement& h, int slot);

enum class WVariant { w, w_prime };

/// W(f (x) g) = (Delta f) x (1 (x) g);  W'(f (x) g) = (f (x) 1) x (Delta g).
TensorElement fundamental_w(const MatrixCoeffAlgebra& g, const TensorElement& h,
                            WVariant variant);

/// Hopf-algebraic inverse candidates,
///   W^{-1}(f (x) g)  = ((id (x) S) Delta f) x (1 (x) g),
///   W'^{-1}(f (x) g) = (f (x) 1) x ((S (x) id) Delta g);
/// validated against W on the monomial basis by the test suites (equality
/// holds modulo the group relations, so it is decided in the function model).
TensorElement fundamental_w_inverse(const MatrixCoeffAlgebra& g,
                                    const TensorElement& h, WVariant variant);

TensorElement outer2(const MatrixCoeffAlgebra& g, const PolyElement& f,
                     const PolyElement& h);

/// All monomials of total degree <= max_degree, in a deterministic order.
std::vector<Exponents> monomial_basis(const AlgebraPtr& alg, int max_degree);

}  // namespace ncdeform
