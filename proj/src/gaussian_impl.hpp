// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fgswap/errors.hpp"
#include "fgswap/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fgswap {

namespace detail {

template <typename Real> CMatrix<Real> identity(Index n) { return CMatrix<Real>::Identity(n, n); }

template <typename Real> void fill_from_correlation(RMatrix<Real>& R, const Sites& modes, const CMatrix<Real>& C) {
  using std::imag;
  using std::real;
  const auto m = static_cast<Index>(modes.size());
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      const Index i = modes[a], j = modes[b];
      const Real re = real(C(a, b)), im = imag(C(a, b));
      const Real d = (a == b) ? Real(1) : Real(0);
      R(2 * i, 2 * j) = 2 * im;
      R(2 * i + 1, 2 * j + 1) = 2 * im;
      R(2 * i, 2 * j + 1) = d - 2 * re;
      R(2 * i + 1, 2 * j) = 2 * re - d;
    }
}

template <typename Real> RMatrix<Real> restrict(const RMatrix<Real>& R, const std::vector<Index>& idx) {
  if (idx.empty()) return R;
  const auto n = static_cast<Index>(idx.size());
  RMatrix<Real> out(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out(a, b) = R(idx[a], idx[b]);
  return out;
}

template <typename Real> CMatrix<Real> compose_unchecked(const CMatrix<Real>& g1, const CMatrix<Real>& g2) {
  const CMatrix<Real> I = identity<Real>(g1.rows());
  const CMatrix<Real> a = I + g1 * g2;
  const CMatrix<Real> x = a.partialPivLu().solve(I - g1);
  return I - (I - g2) * x;
}

template <typename Real>
CMatrix<Real> compose_checked(const CMatrix<Real>& g1, const CMatrix<Real>& g2, Real& sigma_min) {
  require(g1.rows() == g2.rows() && g1.cols() == g2.cols(), "mode-count mismatch");
  const CMatrix<Real> a = identity<Real>(g1.rows()) + g1 * g2;
  const Real s = smallest_singular_value<Real>(a);
  if (s < sigma_min) sigma_min = s;
  if (s < singular_threshold<Real>()) throw CompositionSingular(to_double(s));
  return compose_unchecked<Real>(g1, g2);
}

} // namespace detail

template <typename Real> MajoranaCorrelation<Real> gamma_from_correlation(const CMatrix<Real>& C) {
  require(C.rows() == C.cols(), "correlation matrix must be square");
  const auto m = static_cast<int>(C.rows());
  MajoranaCorrelation<Real> g{RMatrix<Real>::Zero(2 * m, 2 * m)};
  Sites all(m);
  for (int j = 0; j < m; ++j) all[j] = j;
  detail::fill_from_correlation<Real>(g.R, all, C);
  return g;
}

template <typename Real> CMatrix<Real> correlation_from_gamma(const MajoranaCorrelation<Real>& g) {
  const Index m = g.num_modes();
  CMatrix<Real> C(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const Real d = (i == j) ? Real(1) : Real(0);
      C(i, j) = make_complex<Real>((d - g.R(2 * i, 2 * j + 1)) / 2, g.R(2 * i, 2 * j) / 2);
    }
  return C;
}

template <typename Real> MajoranaCorrelation<Real> gamma_from_orbitals(const OrbitalMatrix<Real>& phi) {
  using std::abs;
  const Index n = phi.rows();
  if (n > 0) {
    const CMatrix<Real> gram = phi * phi.adjoint() - CMatrix<Real>::Identity(n, n);
    Real err(0);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) err = std::max<Real>(err, Real(abs(gram(i, j))));
    require(err <= Real(1e-10), "orbital rows are not orthonormal");
  }
  const CMatrix<Real> C = phi.adjoint() * phi;
  return gamma_from_correlation<Real>(C);
}

template <typename Real>
MajoranaCorrelation<Real> gamma_direct_sum(const MajoranaCorrelation<Real>& a, const MajoranaCorrelation<Real>& b) {
  const Index na = a.R.rows(), nb = b.R.rows();
  MajoranaCorrelation<Real> g{RMatrix<Real>::Zero(na + nb, na + nb)};
  g.R.topLeftCorner(na, na) = a.R;
  g.R.bottomRightCorner(nb, nb) = b.R;
  return g;
}

template <typename Real>
MajoranaCorrelation<Real> rung_states_gamma(int L, const std::vector<std::pair<int, RungProjector>>& rungs) {
  using std::conj;
  MajoranaCorrelation<Real> g{RMatrix<Real>::Zero(4 * L, 4 * L)};
  for (const auto& [i, proj] : rungs) {
    require(i >= 0 && i < L, "rung index out of range");
    const auto [a, b] = proj.template amplitudes<Real>();
    CMatrix<Real> c(2, 2);
    c(0, 0) = conj(a) * a;
    c(0, 1) = conj(a) * b;
    c(1, 0) = conj(b) * a;
    c(1, 1) = conj(b) * b;
    detail::fill_from_correlation<Real>(g.R, {i, L + i}, c);
  }
  return g;
}

template <typename Real>
MajoranaCorrelation<Real> projector_gamma(int L, const Sites& measured, const RungProjector& proj) {
  std::vector<std::pair<int, RungProjector>> rungs;
  for (int i : measured) rungs.emplace_back(i, proj);
  return rung_states_gamma<Real>(L, rungs);
}

template <typename Real> CMatrix<Real> gamma_operator(const MajoranaCorrelation<Real>& g) {
  const Index n = g.R.rows();
  CMatrix<Real> G(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) G(i, j) = make_complex<Real>(Real(0), g.R(i, j));
  return G;
}

template <typename Real> Real smallest_singular_value(const CMatrix<Real>& a) {
  if (a.rows() == 0) return Real(1);
  if constexpr (std::is_same_v<Real, double>) {
    Eigen::BDCSVD<CMatrix<Real>> svd(a);
    return svd.singularValues().minCoeff();
  } else {
    Eigen::JacobiSVD<CMatrix<Real>> svd(a);
    return svd.singularValues().minCoeff();
  }
}

template <typename Real> CMatrix<Real> compose(const CMatrix<Real>& g1, const CMatrix<Real>& g2) {
  Real s = std::numeric_limits<Real>::infinity();
  return detail::compose_checked<Real>(g1, g2, s);
}

template <typename Real>
PostMeasurement<Real> post_measurement(const MajoranaCorrelation<Real>& g0, const MajoranaCorrelation<Real>& gM) {
  using std::abs;
  const CMatrix<Real> G0 = gamma_operator(g0);
  const CMatrix<Real> GM = gamma_operator(gM);
  PostMeasurement<Real> out{{}, std::numeric_limits<Real>::infinity(), false};
  CMatrix<Real> post;
  try {
    post = detail::compose_checked<Real>(detail::compose_checked<Real>(GM, G0, out.sigma_min), GM, out.sigma_min);
  } catch (const CompositionSingular&) {
    auto mixed = [&](double eta) {
      const CMatrix<Real> gm = GM * Complex<Real>(Real(1) - Real(eta));
      return detail::compose_unchecked<Real>(detail::compose_unchecked<Real>(gm, G0), gm);
    };
    post = mixed(1e-9);
    const CMatrix<Real> coarse = mixed(1e-8);
    Real change(0);
    for (Index j = 0; j < post.cols(); ++j)
      for (Index i = 0; i < post.rows(); ++i) change = std::max<Real>(change, Real(abs(post(i, j) - coarse(i, j))));
    if (!(change < Real(1e-6))) throw CompositionSingular(to_double(out.sigma_min));
    out.regularized = true;
  }
  out.gamma.R = post.imag();
  return out;
}

template <typename Real> Real entropy_from_gamma(const MajoranaCorrelation<Real>& g, const Sites& modes) {
  if (modes.empty()) return Real(0);
  const auto idx = majorana_indices(modes);
  for (Index k : idx) require(k >= 0 && k < g.R.rows(), "mode index out of range");
  const RMatrix<Real> r = detail::restrict(g.R, idx);
  const auto n = static_cast<Index>(idx.size());
  CMatrix<Real> h(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) h(i, j) = make_complex<Real>(Real(0), r(i, j));
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(h, Eigen::EigenvaluesOnly);
  Real S(0);
  for (Index k = 0; k < n; ++k) {
    Real nu = es.eigenvalues()(k);
    nu = std::clamp<Real>(nu, Real(-1), Real(1));
    S += binary_entropy<Real>((Real(1) + nu) / 2);
  }
  return S / 2;
}

template <typename Real>
Real log_trace_product(const MajoranaCorrelation<Real>& g1, const MajoranaCorrelation<Real>& g2,
                       const std::vector<Index>& indices) {
  using std::abs;
  using std::log;
  require(g1.R.rows() == g2.R.rows(), "mode-count mismatch");
  const RMatrix<Real> r1 = detail::restrict(g1.R, indices);
  const RMatrix<Real> r2 = detail::restrict(g2.R, indices);
  const Index n = r1.rows();
  if (n == 0) return Real(0);
  const RMatrix<Real> a = (RMatrix<Real>::Identity(n, n) - r1 * r2) / Real(2);
  Eigen::PartialPivLU<RMatrix<Real>> lu(a);
  Real s(0);
  for (Index k = 0; k < n; ++k) {
    const Real u = abs(lu.matrixLU()(k, k));
    if (u == Real(0)) return -std::numeric_limits<Real>::infinity();
    s += log(u);
  }
  return s / 2;
}

template <typename Real> Real gaussian_fidelity(const MajoranaCorrelation<Real>& a, const MajoranaCorrelation<Real>& b) {
  using std::exp;
  return exp(log_trace_product<Real>(a, b));
}

template <typename Real>
Real log_measurement_probability(const MajoranaCorrelation<Real>& g0, int L, const Sites& measured,
                                 const RungProjector& proj) {
  require(g0.num_modes() == 2 * L, "state must live on 2L modes");
  if (measured.empty()) return Real(0);
  Sites modes;
  for (int i : measured) {
    modes.push_back(i);
    modes.push_back(L + i);
  }
  std::sort(modes.begin(), modes.end());
  return log_trace_product<Real>(projector_gamma<Real>(L, measured, proj), g0, majorana_indices(modes));
}

template <typename Real> Real antisymmetry_error(const MajoranaCorrelation<Real>& g) {
  if (g.R.size() == 0) return Real(0);
  return (g.R + g.R.transpose()).cwiseAbs().maxCoeff();
}

#define FGSWAP_GAUSSIAN_INSTANTIATE(R)                                                                             \
  template MajoranaCorrelation<R> gamma_from_correlation<R>(const CMatrix<R>&);                                    \
  template CMatrix<R> correlation_from_gamma<R>(const MajoranaCorrelation<R>&);                                    \
  template MajoranaCorrelation<R> gamma_from_orbitals<R>(const OrbitalMatrix<R>&);                                 \
  template MajoranaCorrelation<R> gamma_direct_sum<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&); \
  template MajoranaCorrelation<R> rung_states_gamma<R>(int, const std::vector<std::pair<int, RungProjector>>&);    \
  template MajoranaCorrelation<R> projector_gamma<R>(int, const Sites&, const RungProjector&);                     \
  template CMatrix<R> gamma_operator<R>(const MajoranaCorrelation<R>&);                                            \
  template R smallest_singular_value<R>(const CMatrix<R>&);                                                        \
  template CMatrix<R> compose<R>(const CMatrix<R>&, const CMatrix<R>&);                                            \
  template PostMeasurement<R> post_measurement<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&);   \
  template R entropy_from_gamma<R>(const MajoranaCorrelation<R>&, const Sites&);                                   \
  template R log_trace_product<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&,                    \
                                  const std::vector<Index>&);                                                      \
  template R gaussian_fidelity<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&);                   \
  template R log_measurement_probability<R>(const MajoranaCorrelation<R>&, int, const Sites&, const RungProjector&); \
  template R antisymmetry_error<R>(const MajoranaCorrelation<R>&);

} // namespace fgswap
