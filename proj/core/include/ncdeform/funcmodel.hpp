// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncdeform/hopf.hpp"

namespace ncdeform {

/// Decides equality of matrix-coefficient elements modulo the group's
/// defining relations, exactly.
///
/// The free commutative algebra on u_{ab}, u*_{ab} satisfies every coalgebra
/// identity on its own, but the antipode axiom and the invertibility of W
/// genuinely use unitarity of the defining representation. Rather than
/// rewriting modulo the unitarity ideal, elements are mapped into a faithful
/// function model:
///   T^l    Laurent polynomials in the diagonal entries,
///   U(2)   the localization C[z11,z12,z21,z22][1/det], with
///          conj(u_{ab}) |-> cofactor_{ab}(z) / det(z).
/// Both targets are integral domains with decidable zero testing, so an
/// element vanishes on the group iff its image vanishes.
class FunctionModel {
 public:
  explicit FunctionModel(const MatrixCoeffAlgebra& g);

  bool is_zero(const PolyElement& f) const;
  bool equal(const PolyElement& a, const PolyElement& b) const {
    return is_zero(a - b);
  }

  /// Zero test for tensors whose slots are all over the same group algebra.
  bool tensor_is_zero(const TensorElement& t) const;
  bool tensor_equal(const TensorElement& a, const TensorElement& b) const {
    return tensor_is_zero(a - b);
  }

 private:
  const MatrixCoeffAlgebra* g_;
};

}  // namespace ncdeform
