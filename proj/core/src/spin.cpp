// Copyright 2026 The ncdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "ncdeform/spin.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

namespace ncdeform {

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const ComplexOp& x) {
  EMatrix m(x.dim(), x.dim());
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = 0; j < x.dim(); ++j) m(i, j) = x.at(i, j);
  }
  return m;
}

ComplexOp from_eigen(const EMatrix& m, int radius) {
  ComplexOp x(static_cast<int>(m.rows()), radius);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) x.at(i, j) = m(i, j);
  }
  return x;
}

// fiber gamma matrices as (re, im) integer pairs; i = phase(1/4)
struct FiberEntry {
  int re, im;
};
using FiberMatrix = std::vector<std::vector<FiberEntry>>;

const FiberMatrix kSigmaX{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
const FiberMatrix kSigmaY{{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}};
const FiberMatrix kSigmaZ{{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}};

template <class S>
S fiber_value(const FiberEntry& e) {
  S v = SpinScalar<S>::rational(Rational(e.re));
  if (e.im != 0) {
    v = v + SpinScalar<S>::phase(RationalAngle::of(1, 4)) *
                SpinScalar<S>::rational(Rational(e.im));
  }
  return v;
}

std::vector<FiberMatrix> gamma_set(int l) {
  if (l == 2) return {kSigmaX, kSigmaY};
  if (l == 3) return {kSigmaX, kSigmaY, kSigmaZ};
  throw std::invalid_argument("unsupported rank: l must be 2 or 3");
}

}  // namespace

LatticeVector TruncatedLattice::flip(const LatticeVector& k) const {
  LatticeVector out(l);
  for (int j = 0; j < l; ++j) {
    if (offsets[j] == 0) {
      out[j] = -k[j];
    } else if (k[j] == N) {
      out[j] = N;  // no partner inside the truncation; fixed (boundary face)
    } else {
      out[j] = -k[j] - 1;
    }
  }
  return out;
}

TruncatedLattice make_lattice(int l, int N, std::vector<Rational> offsets) {
  if (l < 1) throw std::invalid_argument("rank must be positive");
  if (N < 1) throw std::invalid_argument("cutoff must be positive");
  if (offsets.empty()) offsets.assign(l, Rational(1, 2));
  if (static_cast<int>(offsets.size()) != l) {
    throw std::invalid_argument("need one offset per axis");
  }
  for (const auto& off : offsets) {
    if (off != 0 && off != Rational(1, 2)) {
      throw std::invalid_argument("offsets must be 0 or 1/2");
    }
  }
  TruncatedLattice lat;
  lat.l = l;
  lat.N = N;
  lat.offsets = std::move(offsets);
  lat.fiber = 1 << (l / 2);

  LatticeVector k(l, -N);
  while (true) {
    lat.site_index.emplace(k, static_cast<int>(lat.sites.size()));
    lat.sites.push_back(k);
    int j = l - 1;
    while (j >= 0 && k[j] == N) {
      k[j] = -N;
      --j;
    }
    if (j < 0) break;
    ++k[j];
  }
  return lat;
}

template <class S>
TripleBundle<S> build_torus_triple(int l, int N, const DeformMatrix& theta,
                                   std::vector<Rational> offsets) {
  if (l != 2 && l != 3) throw std::invalid_argument("unsupported rank");
  if (N < 2) throw std::invalid_argument("cutoff too small");
  if (theta.rank() != l) throw std::invalid_argument("theta rank mismatch");

  TripleBundle<S> b{make_lattice(l, N, std::move(offsets)),
                    theta.half(),
                    theta,
                    DenseOp<S>(0),
                    DenseOp<S>(0),
                    false,
                    DenseOp<S>(0),
                    0};
  const auto& lat = b.lat;
  const int dim = lat.dim();
  const auto gammas = gamma_set(l);

  // D0 = sum_j gamma^j p_j: block diagonal over sites
  DenseOp<S> dirac(dim, 0);
  for (int site = 0; site < lat.site_count(); ++site) {
    const auto m = lat.momentum(site);
    for (int s = 0; s < lat.fiber; ++s) {
      for (int t = 0; t < lat.fiber; ++t) {
        S entry{};
        for (int j = 0; j < l; ++j) {
          const auto& e = gammas[j][s][t];
          if (e.re == 0 && e.im == 0) continue;
          entry = entry + fiber_value<S>(e) * SpinScalar<S>::rational(m[j]);
        }
        if (SpinScalar<S>::nonzero(entry)) {
          dirac.at(lat.index(site, s), lat.index(site, t)) = entry;
        }
      }
    }
  }
  b.dirac = std::move(dirac);

  // grading for even rank: sigma_z per site
  b.has_chi = (l % 2 == 0);
  DenseOp<S> chi(dim, 0);
  if (b.has_chi) {
    for (int site = 0; site < lat.site_count(); ++site) {
      for (int s = 0; s < lat.fiber; ++s) {
        for (int t = 0; t < lat.fiber; ++t) {
          const auto& e = kSigmaZ[s][t];
          if (e.re == 0 && e.im == 0) continue;
          chi.at(lat.index(site, s), lat.index(site, t)) = fiber_value<S>(e);
        }
      }
    }
  } else {
    chi = DenseOp<S>::identity(dim);
  }
  b.chi = std::move(chi);

  // C = (site flip (x) sigma_y) o conj; flips every momentum away from the
  // fixed boundary faces, and conjugates D back onto itself there
  DenseOp<S> cu(dim, 0);
  for (int site = 0; site < lat.site_count(); ++site) {
    const int flipped = lat.site_index.at(lat.flip(lat.sites[site]));
    for (int s = 0; s < lat.fiber; ++s) {
      for (int t = 0; t < lat.fiber; ++t) {
        const auto& e = kSigmaY[s][t];
        if (e.re == 0 && e.im == 0) continue;
        cu.at(lat.index(flipped, s), lat.index(site, t)) = fiber_value<S>(e);
      }
    }
  }
  b.c_unitary = std::move(cu);

  // C^2 = U conj(U); record the sign rather than asserting it up front
  const DenseOp<S> c2 = b.c_unitary * b.c_unitary.entrywise_conj();
  const S diag0 = c2.at(0, 0);
  int sign = 0;
  if (!SpinScalar<S>::nonzero(diag0 - S(1))) sign = 1;
  if (!SpinScalar<S>::nonzero(diag0 - S(-1))) sign = -1;
  if (sign == 0) throw std::logic_error("C^2 is not a sign");
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const S expect = (i == j) ? S(sign) : S{};
      if (SpinScalar<S>::nonzero(c2.at(i, j) - expect)) {
        throw std::logic_error("C^2 is not scalar");
      }
    }
  }
  b.c_square = sign;
  return b;
}

template <class S>
DenseOp<S> sigma_p(const TripleBundle<S>& b, const LatticeVector& r,
                   bool swapped) {
  const auto& lat = b.lat;
  if (static_cast<int>(r.size()) != lat.l) {
    throw std::invalid_argument("lattice vector rank mismatch");
  }
  DenseOp<S> out(lat.dim(), 0);
  for (int site = 0; site < lat.site_count(); ++site) {
    const auto m = lat.momentum(site);
    // exponent -(m . Q r) for sigma(p, r), -(r . Q m) for sigma(r, p)
    Rational expo = 0;
    for (int j = 0; j < lat.l; ++j) {
      for (int k = 0; k < lat.l; ++k) {
        expo += (swapped ? Rational(r[j]) * b.Q.at(j, k) * m[k]
                         : m[j] * b.Q.at(j, k) * Rational(r[k]));
      }
    }
    const S ph = SpinScalar<S>::phase(RationalAngle(-expo));
    for (int s = 0; s < lat.fiber; ++s) {
      out.at(lat.index(site, s), lat.index(site, s)) = ph;
    }
  }
  return out;
}

template <class S>
DenseOp<S> l_rep(const TripleBundle<S>& b, const TorusElement& f) {
  const auto& lat = b.lat;
  if (f.rank() != lat.l) throw std::invalid_argument("torus rank mismatch");
  const long radius = f.support_radius();
  if (radius > 2L * lat.N) {
    throw std::invalid_argument("support exceeds cutoff");
  }
  DenseOp<S> out(lat.dim(), static_cast<int>(radius));
  for (const auto& [r, coeff] : f.coeffs()) {
    const S cv = SpinScalar<S>::value(coeff);
    if (!SpinScalar<S>::nonzero(cv)) continue;
    for (int site = 0; site < lat.site_count(); ++site) {
      const LatticeVector target = add(lat.sites[site], r);
      if (!lat.in_range(target)) continue;
      const int tsite = lat.site_index.at(target);
      // sigma(r, p) evaluated at the source momentum
      const auto m = lat.momentum(site);
      Rational expo = 0;
      for (int j = 0; j < lat.l; ++j) {
        for (int k = 0; k < lat.l; ++k) {
          expo += Rational(r[j]) * b.Q.at(j, k) * m[k];
        }
      }
      const S ph = SpinScalar<S>::phase(RationalAngle(-expo)) * cv;
      for (int s = 0; s < lat.fiber; ++s) {
        out.at(lat.index(tsite, s), lat.index(site, s)) =
            out.at(lat.index(tsite, s), lat.index(site, s)) + ph;
      }
    }
  }
  return out;
}

template <class S>
DenseOp<S> r_rep(const TripleBundle<S>& b, const TorusElement& f) {
  const auto& lat = b.lat;
  if (f.rank() != lat.l) throw std::invalid_argument("torus rank mismatch");
  const long radius = f.support_radius();
  if (radius > 2L * lat.N) {
    throw std::invalid_argument("support exceeds cutoff");
  }
  DenseOp<S> out(lat.dim(), static_cast<int>(radius));
  for (const auto& [r, coeff] : f.coeffs()) {
    const S cv = SpinScalar<S>::value(coeff);
    if (!SpinScalar<S>::nonzero(cv)) continue;
    for (int site = 0; site < lat.site_count(); ++site) {
      const LatticeVector target = add(lat.sites[site], r);
      if (!lat.in_range(target)) continue;
      const int tsite = lat.site_index.at(target);
      // sigma(p, r) evaluated at the source momentum
      const auto m = lat.momentum(site);
      Rational expo = 0;
      for (int j = 0; j < lat.l; ++j) {
        for (int k = 0; k < lat.l; ++k) {
          expo += m[j] * b.Q.at(j, k) * Rational(r[k]);
        }
      }
      const S ph = SpinScalar<S>::phase(RationalAngle(-expo)) * cv;
      for (int s = 0; s < lat.fiber; ++s) {
        out.at(lat.index(tsite, s), lat.index(site, s)) =
            out.at(lat.index(tsite, s), lat.index(site, s)) + ph;
      }
    }
  }
  return out;
}

ComplexOp fast_complex_mul(const ComplexOp& a, const ComplexOp& b) {
  using CMap = Eigen::Map<const Eigen::Matrix<std::complex<double>,
                                              Eigen::Dynamic, Eigen::Dynamic,
                                              Eigen::RowMajor>>;
  using MMap = Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                        Eigen::Dynamic, Eigen::RowMajor>>;
  ComplexOp r(a.dim(), 0);
  CMap ma(a.data().data(), a.dim(), a.dim());
  CMap mb(b.data().data(), b.dim(), b.dim());
  MMap mr(r.data().data(), r.dim(), r.dim());
  mr = ma * mb;
  return r;
}

double interior_residual(const TruncatedLattice& lat, const ComplexOp& x,
                         int radius) {
  double worst = 0;
  for (int site = 0; site < lat.site_count(); ++site) {
    if (!lat.interior(lat.sites[site], radius)) continue;
    for (int s = 0; s < lat.fiber; ++s) {
      const int col = lat.index(site, s);
      for (int row = 0; row < x.dim(); ++row) {
        worst = std::max(worst, std::abs(x.at(row, col)));
      }
    }
  }
  return worst;
}

bool interior_is_zero(const TruncatedLattice& lat, const ExactOp& x,
                      int radius) {
  for (int site = 0; site < lat.site_count(); ++site) {
    if (!lat.interior(lat.sites[site], radius)) continue;
    for (int s = 0; s < lat.fiber; ++s) {
      const int col = lat.index(site, s);
      for (int row = 0; row < x.dim(); ++row) {
        if (!x.at(row, col).is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexOp& x) {
  Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(x),
                                            Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  return ev;
}

ComplexOp dirac_sign(const TripleBundle<std::complex<double>>& b) {
  Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(b.dirac));
  const auto& ev = es.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) < 1e-9) {
      throw std::runtime_error(
          "D is singular on this truncation; use the half-integer offset");
    }
  }
  Eigen::VectorXd signs(ev.size());
  for (int i = 0; i < ev.size(); ++i) signs(i) = ev(i) > 0 ? 1.0 : -1.0;
  const EMatrix f = es.eigenvectors() * signs.asDiagonal() *
                    es.eigenvectors().adjoint();
  return from_eigen(f, 0);
}

std::vector<double> singular_values(const ComplexOp& x) {
  Eigen::BDCSVD<EMatrix> svd(to_eigen(x));
  std::vector<double> sv(svd.singularValues().data(),
                         svd.singularValues().data() +
                             svd.singularValues().size());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

SchattenReport schatten_report(const TripleBundle<std::complex<double>>& b,
                               const TorusElement& u,
                               const std::vector<int>& p_values) {
  const ComplexOp f = dirac_sign(b);
  const ComplexOp lu = l_rep(b, u);
  SchattenReport rep;
  rep.singular_values = singular_values(commutator(f, lu));
  for (int p : p_values) {
    if (p < 1) throw std::invalid_argument("Schatten index must be >= 1");
    double acc = 0;
    for (double s : rep.singular_values) acc += std::pow(s, p);
    rep.p_norms[p] = std::pow(acc, 1.0 / p);
  }
  return rep;
}

template struct TripleBundle<std::complex<double>>;
template struct TripleBundle<CycScalar>;
template TripleBundle<std::complex<double>> build_torus_triple(
    int, int, const DeformMatrix&, std::vector<Rational>);
template TripleBundle<CycScalar> build_torus_triple(int, int,
                                                    const DeformMatrix&,
                                                    std::vector<Rational>);
template DenseOp<std::complex<double>> sigma_p(
    const TripleBundle<std::complex<double>>&, const LatticeVector&, bool);
template DenseOp<CycScalar> sigma_p(const TripleBundle<CycScalar>&,
                                    const LatticeVector&, bool);
template DenseOp<std::complex<double>> l_rep(
    const TripleBundle<std::complex<double>>&, const TorusElement&);
template DenseOp<CycScalar> l_rep(const TripleBundle<CycScalar>&,
                                  const TorusElement&);
template DenseOp<std::complex<double>> r_rep(
    const TripleBundle<std::complex<double>>&, const TorusElement&);
template DenseOp<CycScalar> r_rep(const TripleBundle<CycScalar>&,
                                  const TorusElement&);

}  // namespace ncdeform
