// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fgswap/slater.hpp"

#include <limits>

namespace fgswap {

namespace detail {

inline void check_ascending(const Sites& idx, Index bound, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    require(idx[k] >= 0 && idx[k] < bound, what);
    if (k > 0) require(idx[k - 1] < idx[k], what);
  }
}

} // namespace detail

template <typename Real> Complex<Real> minor_det(const CMatrix<Real>& m, const Sites& rows, const Sites& cols) {
  require(rows.size() == cols.size(), "ragged minor selection");
  detail::check_ascending(rows, m.rows(), "row indices must be ascending and in range");
  detail::check_ascending(cols, m.cols(), "column indices must be ascending and in range");
  if (rows.empty()) return Complex<Real>(Real(1));
  const CMatrix<Real> sub = m(rows, cols);
  return sub.partialPivLu().determinant();
}

template <typename Real>
PostselectProbability<Real> postselect_probability(const OrbitalMatrix<Real>& phi, const Sites& a_left) {
  using std::abs;
  const auto L = static_cast<int>(phi.cols());
  const auto N = static_cast<int>(phi.rows());
  require(L % 2 == 0 && static_cast<int>(a_left.size()) == L / 2, "a_left must hold L/2 sites");
  Sites left = a_left;
  std::sort(left.begin(), left.end());
  detail::check_ascending(left, L, "a_left must hold distinct sites in range");
  if (2 * N != L) return {Real(0), false};
  const Real dl = abs(slater_minor<Real>(phi, left));
  const Real dr = abs(slater_minor<Real>(phi, complement(left, L)));
  return {dl * dl * dr * dr, true};
}

template <typename Real> CMatrix<Real> correlation_submatrix(const OrbitalMatrix<Real>& phi, const Sites& a) {
  require(!a.empty(), "empty site set");
  for (int j : a) require(j >= 0 && j < phi.cols(), "site index out of range");
  const CMatrix<Real> sub = phi(Eigen::all, a);
  return sub.adjoint() * sub;
}

template <typename Real> EntanglementSpectrum<Real> entanglement_spectrum(const CMatrix<Real>& c) {
  using std::abs;
  using std::log;
  require(c.rows() == c.cols(), "correlation matrix must be square");
  Real herm(0);
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < c.rows(); ++i) {
      using std::conj;
      herm = std::max<Real>(herm, Real(abs(c(i, j) - conj(c(j, i)))));
    }
  require(herm <= Real(1e-9), "correlation matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> es(c, Eigen::EigenvaluesOnly);
  EntanglementSpectrum<Real> spec;
  for (Index k = 0; k < c.rows(); ++k) {
    Real x = es.eigenvalues()(k);
    require(x >= Real(-1e-10) && x <= Real(1) + Real(1e-10), "correlation eigenvalue outside [0, 1]");
    x = std::clamp<Real>(x, Real(0), Real(1));
    spec.xi.push_back(x);
    if (x == Real(0))
      spec.eps.push_back(std::numeric_limits<Real>::infinity());
    else if (x == Real(1))
      spec.eps.push_back(-std::numeric_limits<Real>::infinity());
    else
      spec.eps.push_back(log((Real(1) - x) / x));
  }
  return spec;
}

#define FGSWAP_SLATER_INSTANTIATE(R)                                                                 \
  template Complex<R> minor_det<R>(const CMatrix<R>&, const Sites&, const Sites&);                    \
  template PostselectProbability<R> postselect_probability<R>(const OrbitalMatrix<R>&, const Sites&); \
  template CMatrix<R> correlation_submatrix<R>(const OrbitalMatrix<R>&, const Sites&);                \
  template EntanglementSpectrum<R> entanglement_spectrum<R>(const CMatrix<R>&);

} // namespace fgswap
