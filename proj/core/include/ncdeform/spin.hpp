// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "ncdeform/algebra.hpp"

namespace ncdeform {

// ---------------------------------------------------------------------------
// Truncated lattice-spinor space
// ---------------------------------------------------------------------------

/// Sites k in Z^l with |k|_inf <= N, tensored with a 2^{floor(l/2)} spinor
/// fiber. Momenta are m_j = k_j + off_j with off_j in {0, 1/2}; the
/// half-integer offset (antiperiodic structure) keeps D invertible and is
/// the default.
///
/// Truncation contract: operator identities are asserted on vectors
/// supported in |k|_inf <= N - R, where R sums the shift radii of all
/// factors involved. The momentum-flip map behind the real structure C fixes
/// the k_j = +N face of each half-offset axis, so C-identities also fall
/// under the contract (radius 1 suffices for them).
struct TruncatedLattice {
  int l = 0;
  int N = 0;
  std::vector<Rational> offsets;
  int fiber = 1;
  std::vector<LatticeVector> sites;
  std::map<LatticeVector, int> site_index;

  int site_count() const { return static_cast<int>(sites.size()); }
  int dim() const { return site_count() * fiber; }
  int index(int site, int spin) const { return site * fiber + spin; }

  std::vector<Rational> momentum(int site) const {
    std::vector<Rational> m(l);
    for (int j = 0; j < l; ++j) m[j] = Rational(sites[site][j]) + offsets[j];
    return m;
  }

  bool in_range(const LatticeVector& k) const {
    for (long x : k) {
      if (x < -N || x > N) return false;
    }
    return true;
  }
  bool interior(const LatticeVector& k, int radius) const {
    for (long x : k) {
      if (x < -(N - radius) || x > N - radius) return false;
    }
    return true;
  }
  /// Momentum-flip site map: -k on integer-offset axes, -k-1 (with the +N
  /// face fixed) on half-offset axes.
  LatticeVector flip(const LatticeVector& k) const;
};

TruncatedLattice make_lattice(int l, int N, std::vector<Rational> offsets);

// ---------------------------------------------------------------------------
// Dense operators over an exact or floating scalar
// ---------------------------------------------------------------------------

template <class S>
struct SpinScalar;

template <>
struct SpinScalar<std::complex<double>> {
  static std::complex<double> phase(const RationalAngle& a) {
    const double t = 2.0 * std::numbers::pi * a.turns().convert_to<double>();
    return {std::cos(t), std::sin(t)};
  }
  static std::complex<double> value(const CycScalar& c) {
    const auto [re, im] = c.to_complex();
    return {re, im};
  }
  static std::complex<double> rational(const Rational& q) {
    return {q.convert_to<double>(), 0.0};
  }
  static std::complex<double> conjugate(const std::complex<double>& z) {
    return std::conj(z);
  }
  static bool nonzero(const std::complex<double>& z) { return z != 0.0; }
};

template <>
struct SpinScalar<CycScalar> {
  static CycScalar phase(const RationalAngle& a) { return CycScalar::phase(a); }
  static const CycScalar& value(const CycScalar& c) { return c; }
  static CycScalar rational(const Rational& q) { return CycScalar(q); }
  static CycScalar conjugate(const CycScalar& z) { return conj(z); }
  static bool nonzero(const CycScalar& z) { return z.term_count() > 0; }
};

class ComplexOpImplHook;

/// Row-major dense matrix with a declared degree-shift radius: entries
/// between sites farther apart than shift_radius vanish. The radius is
/// bookkeeping for the truncation contract; sums take the max, products add.
template <class S>
class DenseOp {
 public:
  DenseOp(int dim, int shift_radius = 0)
      : dim_(dim), shift_radius_(shift_radius),
        a_(static_cast<std::size_t>(dim) * dim) {}

  static DenseOp identity(int dim) {
    DenseOp m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = S(1);
    return m;
  }

  int dim() const { return dim_; }
  int shift_radius() const { return shift_radius_; }
  void set_shift_radius(int r) { shift_radius_ = r; }

  S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  const S& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const std::vector<S>& data() const { return a_; }
  std::vector<S>& data() { return a_; }

  DenseOp operator+(const DenseOp& o) const {
    DenseOp r(dim_, std::max(shift_radius_, o.shift_radius_));
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  DenseOp operator-(const DenseOp& o) const {
    DenseOp r(dim_, std::max(shift_radius_, o.shift_radius_));
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  DenseOp scaled(const S& c) const {
    DenseOp r(dim_, shift_radius_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
  }
  DenseOp operator*(const DenseOp& o) const;

  DenseOp adjoint() const {
    DenseOp r(dim_, shift_radius_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        r.at(i, j) = SpinScalar<S>::conjugate(at(j, i));
      }
    }
    return r;
  }
  DenseOp entrywise_conj() const {
    DenseOp r(dim_, shift_radius_);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      r.a_[i] = SpinScalar<S>::conjugate(a_[i]);
    }
    return r;
  }

 private:
  int dim_;
  int shift_radius_;
  std::vector<S> a_;
};

using ComplexOp = DenseOp<std::complex<double>>;
using ExactOp = DenseOp<CycScalar>;

/// GEMM through Eigen; lives in the implementation file.
ComplexOp fast_complex_mul(const ComplexOp& a, const ComplexOp& b);

template <class S>
DenseOp<S> DenseOp<S>::operator*(const DenseOp& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  if constexpr (std::is_same_v<S, std::complex<double>>) {
    ComplexOp r = fast_complex_mul(*this, o);
    r.set_shift_radius(shift_radius_ + o.shift_radius_);
    return r;
  } else {
    DenseOp r(dim_, shift_radius_ + o.shift_radius_);
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < dim_; ++k) {
        if (!SpinScalar<S>::nonzero(at(i, k))) continue;
        for (int j = 0; j < dim_; ++j) {
          if (!SpinScalar<S>::nonzero(o.at(k, j))) continue;
          r.at(i, j) += at(i, k) * o.at(k, j);
        }
      }
    }
    return r;
  }
}

template <class S>
DenseOp<S> commutator(const DenseOp<S>& a, const DenseOp<S>& b) {
  return a * b - b * a;
}

// ---------------------------------------------------------------------------
// The flat torus triple
// ---------------------------------------------------------------------------

/// (H, D, C, chi) on the truncated lattice, plus Q. The Dirac matrix stored
/// here is D0 = sum_j gamma^j p_j; the physical normalization is D = 2 pi D0
/// (exposed through dirac_scale), which only matters for norm values, never
/// for commutation identities or for F = D|D|^{-1}.
template <class S>
struct TripleBundle {
  TruncatedLattice lat;
  DeformMatrix Q;          // l x l, equal to theta/2
  DeformMatrix theta;      // the input parameter matrix
  DenseOp<S> dirac;        // D0
  DenseOp<S> chi;          // grading; identity for odd l (unused)
  bool has_chi = false;
  DenseOp<S> c_unitary;    // C = c_unitary composed with complex conjugation
  int c_square = 0;        // C^2 = c_square * 1 (computed, +1 or -1)

  StarContext torus_context() const { return StarContext::mono(Q); }
};

inline double dirac_scale() { return 2.0 * std::numbers::pi; }

template <class S>
TripleBundle<S> build_torus_triple(int l, int N, const DeformMatrix& theta,
                                   std::vector<Rational> offsets = {});

/// sigma(p, r) = exp{-2 pi i sum p_j Q_{jk} r_k}: diagonal, unitary, commutes
/// with D and chi; its inverse is sigma(r, p) (swapped = true).
template <class S>
DenseOp<S> sigma_p(const TripleBundle<S>& b, const LatticeVector& r,
                   bool swapped = false);

/// L(f) = sum_r f_r S_r sigma(r, p): a representation of x_Q on the interior,
/// i.e. L(f) L(g) = L(f x_Q g). On monomials,
/// L(U^r) L(U^s) = sigma(r,s) L(U^{r+s}) with the cocycle of theta = 2Q.
template <class S>
DenseOp<S> l_rep(const TripleBundle<S>& b, const TorusElement& f);

/// R(f) = sum_r f_r S_r sigma(p, r): the commuting right action; an
/// anti-representation of x_Q, equivalently a representation of x_{-Q}.
/// Equal to C L(f)* C^{-1} on the interior (a verified property).
template <class S>
DenseOp<S> r_rep(const TripleBundle<S>& b, const TorusElement& f);

/// C X C^{-1} for the antiunitary C = (site flip (x) fiber matrix) o conj.
template <class S>
DenseOp<S> conjugate_by_c(const TripleBundle<S>& b, const DenseOp<S>& x) {
  return b.c_unitary * x.entrywise_conj() * b.c_unitary.adjoint();
}

/// Max |entry| of X restricted to columns supported on the interior
/// |k|_inf <= N - radius.
double interior_residual(const TruncatedLattice& lat, const ComplexOp& x,
                         int radius);
bool interior_is_zero(const TruncatedLattice& lat, const ExactOp& x,
                      int radius);

// --- float-only spectral helpers ------------------------------------------

/// Eigenvalues of a Hermitian operator, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexOp& x);

/// F = D |D|^{-1}. Throws if an eigenvalue of D is (numerically) zero, i.e.
/// when an integer-offset axis lets a zero momentum through.
ComplexOp dirac_sign(const TripleBundle<std::complex<double>>& b);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexOp& x);

struct SchattenReport {
  std::vector<double> singular_values;   // of [F, L(u)], descending
  std::map<int, double> p_norms;         // p -> (sum sigma^p)^{1/p}
};
SchattenReport schatten_report(const TripleBundle<std::complex<double>>& b,
                               const TorusElement& u,
                               const std::vector<int>& p_values);

extern template struct TripleBundle<std::complex<double>>;
extern template struct TripleBundle<CycScalar>;
extern template TripleBundle<std::complex<double>> build_torus_triple(
    int, int, const DeformMatrix&, std::vector<Rational>);
extern template TripleBundle<CycScalar> build_torus_triple(
    int, int, const DeformMatrix&, std::vector<Rational>);
extern template DenseOp<std::complex<double>> sigma_p(
    const TripleBundle<std::complex<double>>&, const LatticeVector&, bool);
extern template DenseOp<CycScalar> sigma_p(const TripleBundle<CycScalar>&,
                                           const LatticeVector&, bool);
extern template DenseOp<std::complex<double>> l_rep(
    const TripleBundle<std::complex<double>>&, const TorusElement&);
extern template DenseOp<CycScalar> l_rep(const TripleBundle<CycScalar>&,
                                         const TorusElement&);
extern template DenseOp<std::complex<double>> r_rep(
    const TripleBundle<std::complex<double>>&, const TorusElement&);
extern template DenseOp<CycScalar> r_rep(const TripleBundle<CycScalar>&,
                                         const TorusElement&);

}  // namespace ncdeform
