// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file models.hpp
 * @brief Initial states: open massive chain, Haar-random Slater states, and
 *        the asymptotic entanglement level spacing of the massive chain.
 */

#pragma once

#include "fgswap/scalar.hpp"

#include <cstdint>

namespace fgswap {

/// H0 = -1/2 sum_i (c_i^dag c_{i+1} + h.c.) + m0 sum_i (-1)^i n_i, open
/// boundary, sites counted from 1 in the staggering sign.
struct ChainSpec {
  int L = 2;
  double m0 = 0.0;
  int filling = -1;  ///< particle count; negative means L/2

  [[nodiscard]] int particles() const { return filling < 0 ? L / 2 : filling; }
};

template <typename Real> [[nodiscard]] RMatrix<Real> chain_hamiltonian(const ChainSpec& spec);

/// Rows are the N lowest single-particle eigenvectors; throws
/// DegenerateFermiLevel when the gap at the Fermi level is <= 1e-10.
template <typename Real> [[nodiscard]] OrbitalMatrix<Real> ground_state_orbitals(const ChainSpec& spec);

/// Rows of `m` orthonormalized (QR with positive diagonal, so nearly
/// orthonormal input is barely moved).
template <typename Real> [[nodiscard]] OrbitalMatrix<Real> orthonormalize_rows(const CMatrix<Real>& m);

/// Haar-random N x L orbital matrix from a seeded complex Gaussian matrix.
[[nodiscard]] OrbitalMatrix<double> random_slater(int L, int N, std::uint64_t seed);

/// Complete elliptic integral of the first kind K(k), modulus k in [0, 1), by AGM.
[[nodiscard]] double elliptic_K(double k);

/// 2 pi K(k') / K(k) with k = 1/sqrt(1 + m0^2), k' = m0/sqrt(1 + m0^2); m0 > 0.
[[nodiscard]] double eisler_level_spacing(double m0);

#define FGSWAP_MODELS_EXTERN(R)                                                  \
  extern template RMatrix<R> chain_hamiltonian<R>(const ChainSpec&);             \
  extern template OrbitalMatrix<R> ground_state_orbitals<R>(const ChainSpec&);   \
  extern template OrbitalMatrix<R> orthonormalize_rows<R>(const CMatrix<R>&);

FGSWAP_MODELS_EXTERN(double)
FGSWAP_MODELS_EXTERN(xreal)

#undef FGSWAP_MODELS_EXTERN

} // namespace fgswap
