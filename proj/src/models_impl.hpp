// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fgswap/errors.hpp"
#include "fgswap/models.hpp"

#include <string>

namespace fgswap {

template <typename Real> RMatrix<Real> chain_hamiltonian(const ChainSpec& spec) {
  require(spec.L >= 2 && spec.L % 2 == 0, "chain length must be even and >= 2");
  const int L = spec.L;
  RMatrix<Real> h = RMatrix<Real>::Zero(L, L);
  const Real m0(spec.m0);
  for (int i = 0; i < L; ++i) {
    h(i, i) = (i % 2 == 0) ? Real(-m0) : m0;  // site i + 1 carries (-1)^(i+1)
    if (i + 1 < L) {
      h(i, i + 1) = Real(-0.5);
      h(i + 1, i) = Real(-0.5);
    }
  }
  return h;
}

template <typename Real> OrbitalMatrix<Real> ground_state_orbitals(const ChainSpec& spec) {
  const int N = spec.particles();
  require(N >= 0 && N <= spec.L, "filling out of range");
  Eigen::SelfAdjointEigenSolver<RMatrix<Real>> es(chain_hamiltonian<Real>(spec));
  if (N > 0 && N < spec.L) {
    const Real gap = es.eigenvalues()(N) - es.eigenvalues()(N - 1);
    if (!(gap > Real(1e-10)))
      throw DegenerateFermiLevel("degenerate Fermi level, gap = " + std::to_string(to_double(gap)));
  }
  OrbitalMatrix<Real> phi(N, spec.L);
  for (int q = 0; q < N; ++q)
    for (int i = 0; i < spec.L; ++i) phi(q, i) = Complex<Real>(es.eigenvectors()(i, q));
  return phi;
}

template <typename Real> OrbitalMatrix<Real> orthonormalize_rows(const CMatrix<Real>& m) {
  using std::abs;
  const Index N = m.rows(), L = m.cols();
  if (N == 0) return CMatrix<Real>(0, L);
  require(N <= L, "more orbitals than sites");
  const CMatrix<Real> t = m.adjoint();
  Eigen::HouseholderQR<CMatrix<Real>> qr(t);
  CMatrix<Real> q = qr.householderQ() * CMatrix<Real>::Identity(L, N);
  const CMatrix<Real> r = qr.matrixQR().topRows(N).template triangularView<Eigen::Upper>();
  for (Index k = 0; k < N; ++k) {
    const Real a = abs(r(k, k));
    require(a > Real(0), "rank-deficient orbital matrix");
    q.col(k) *= r(k, k) / Complex<Real>(a);
  }
  return q.adjoint();
}

#define FGSWAP_MODELS_INSTANTIATE(R)                                      \
  template RMatrix<R> chain_hamiltonian<R>(const ChainSpec&);             \
  template OrbitalMatrix<R> ground_state_orbitals<R>(const ChainSpec&);   \
  template OrbitalMatrix<R> orthonormalize_rows<R>(const CMatrix<R>&);

} // namespace fgswap
