// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ncdeform/spin.hpp"

namespace ncdeform {

/// Matrix over the sphere algebra; products twist entrywise through the
/// sphere star context, the involution is the conjugate transpose with
/// entrywise involution.
class AlgebraMatrix {
 public:
  AlgebraMatrix(const SphereAlgebra& s, int rows, int cols);
  static AlgebraMatrix identity(const SphereAlgebra& s, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  PolyElement& at(int i, int j) { return entries_[i * cols_ + j]; }
  const PolyElement& at(int i, int j) const { return entries_[i * cols_ + j]; }
  const SphereAlgebra& sphere() const { return *s_; }

  AlgebraMatrix star_mul(const AlgebraMatrix& o) const;
  AlgebraMatrix operator+(const AlgebraMatrix& o) const;
  AlgebraMatrix operator-(const AlgebraMatrix& o) const;
  AlgebraMatrix scaled(const CycScalar& c) const;
  AlgebraMatrix adjoint() const;
  /// Entrywise reduce_mod_sphere.
  AlgebraMatrix reduced() const;
  bool is_zero() const;

  PolyElement trace() const;

 private:
  const SphereAlgebra* s_;
  int rows_, cols_;
  std::vector<PolyElement> entries_;
};

/// p = p* = p x p mod the sphere ideal, decided exactly.
struct ProjectorCheck {
  bool self_adjoint = false;
  bool idempotent = false;
  bool ok() const { return self_adjoint && idempotent; }
};
ProjectorCheck certify_projector(const AlgebraMatrix& p);

/// The deformed instanton projector p = (1 + Y)/2 over S^4_theta, with
/// Y = [[x 1, T], [T*, -x 1]] and T = [[alpha, mu1 beta], [mu2 beta*,
/// alpha*]]. The unit phases mu1, mu2 are found by search over products of
/// {1, -1, lambda^{+-1}} and certified, not transcribed; the certificate is
/// the projector property itself.
struct InstantonCertificate {
  AlgebraMatrix p;
  CycScalar mu1, mu2;
  int candidates_tried = 0;
  int candidates_certified = 0;
};
InstantonCertificate instanton_projector(const SphereAlgebra& s);

/// Applies a phase to one off-diagonal entry; breaks idempotency (and
/// self-adjointness), for the negative controls.
AlgebraMatrix perturb_entry_phase(const AlgebraMatrix& p, int row, int col,
                                  const CycScalar& phase);

/// Chains a_0 (x) a_1-bar (x) ... with `slots` factors total; slot 0 is a
/// plain algebra element, the barred slots are classes modulo scalars
/// (constant terms dropped). Keys are monomials; all slot entries are kept
/// in normal form by the builders. The zero chain has no surviving
/// coefficients after the multilinear merge.
template <class KeyT>
class ChainT {
 public:
  explicit ChainT(int slots) : slots_(slots) {}

  int slots() const { return slots_; }
  const std::map<std::vector<KeyT>, CycScalar>& terms() const {
    return terms_;
  }
  void add(const std::vector<KeyT>& key, const CycScalar& c) {
    if (static_cast<int>(key.size()) != slots_) {
      throw std::invalid_argument("chain arity mismatch");
    }
    if (c.term_count() == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.term_count() == 0) terms_.erase(it);
    }
  }
  ChainT operator+(const ChainT& o) const {
    ChainT r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
  }
  ChainT scaled(const CycScalar& c) const {
    ChainT r(slots_);
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
  }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_zero(); });
  }
  std::size_t term_count() const { return terms_.size(); }

 private:
  int slots_;
  std::map<std::vector<KeyT>, CycScalar> terms_;
};

using SphereChain = ChainT<Exponents>;
using TorusChain = ChainT<LatticeVector>;

/// ch_0(p) = <p - 1/2> = sum_i (p - 1/2)_{ii}, in normal form.
PolyElement ch0(const AlgebraMatrix& p);

/// ch_1(p) = sum_{ijk} (p - 1/2)_{ij} (x) bar p_{jk} (x) bar p_{ki}.
/// Term counts before/after cancellation are reported alongside.
struct Ch1Result {
  SphereChain chain{3};
  std::size_t terms_before = 0;
  std::size_t terms_after = 0;
};
Ch1Result ch1(const AlgebraMatrix& p);

/// Hochschild boundary of a 2-chain:
/// b(a (x) b-bar (x) c-bar) = ab (x) c-bar - a (x) (bc)-bar + ca (x) b-bar,
/// products taken in the deformed algebra.
SphereChain hochschild_boundary(const SphereAlgebra& s, const SphereChain& c);

/// pi_D(a_0 (x) a_1-bar (x) ... ) = L(a_0) [D, L(a_1)] ... as a truncated
/// operator, physical normalization (each differential carries 2 pi).
ComplexOp pi_d(const TripleBundle<std::complex<double>>& b,
               const TorusChain& chain);

}  // namespace ncdeform
