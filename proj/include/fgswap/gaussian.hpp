// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gaussian.hpp
 * @brief Majorana correlation-matrix backend.
 *
 * Convention: a_{2j} = c_j + c_j^dag, a_{2j+1} = -i (c_j - c_j^dag) and
 * G_kl = <a_k a_l> - delta_kl = i R_kl with R real antisymmetric. Products
 * of Gaussian operators are not Hermitian in general, so the composition
 * works on the complex matrix G directly.
 */

#pragma once

#include "fgswap/rung.hpp"
#include "fgswap/scalar.hpp"

#include <utility>
#include <vector>

namespace fgswap {

template <typename Real> struct MajoranaCorrelation {
  RMatrix<Real> R;

  [[nodiscard]] Index num_modes() const { return R.rows() / 2; }
};

/// Majorana indices (2j, 2j+1) of each mode in `modes`.
[[nodiscard]] std::vector<Index> majorana_indices(const Sites& modes);

/// R from the number-conserving correlation C_ij = <c_i^dag c_j>.
template <typename Real> [[nodiscard]] MajoranaCorrelation<Real> gamma_from_correlation(const CMatrix<Real>& C);

/// C_ij = <c_i^dag c_j> read back from R (anomalous part ignored).
template <typename Real> [[nodiscard]] CMatrix<Real> correlation_from_gamma(const MajoranaCorrelation<Real>& g);

/// Pure Slater state: C = phi^dag phi.
template <typename Real> [[nodiscard]] MajoranaCorrelation<Real> gamma_from_orbitals(const OrbitalMatrix<Real>& phi);

/// Block direct sum under bilayer-block ordering: a on modes 0..La-1, b after.
template <typename Real>
[[nodiscard]] MajoranaCorrelation<Real> gamma_direct_sum(const MajoranaCorrelation<Real>& a,
                                                         const MajoranaCorrelation<Real>& b);

template <typename Real> [[nodiscard]] MajoranaCorrelation<Real> gamma_double(const MajoranaCorrelation<Real>& g) {
  return gamma_direct_sum(g, g);
}

/// Pure rung states on the listed rungs of a 2L-mode bilayer, R = 0 elsewhere.
template <typename Real>
[[nodiscard]] MajoranaCorrelation<Real> rung_states_gamma(int L,
                                                          const std::vector<std::pair<int, RungProjector>>& rungs);

/// Measurement operator: `proj` on every rung in `measured`, maximally mixed elsewhere.
template <typename Real>
[[nodiscard]] MajoranaCorrelation<Real> projector_gamma(int L, const Sites& measured, const RungProjector& proj);

/// G = i R.
template <typename Real> [[nodiscard]] CMatrix<Real> gamma_operator(const MajoranaCorrelation<Real>& g);

/// Smallest singular value of a square matrix.
template <typename Real> [[nodiscard]] Real smallest_singular_value(const CMatrix<Real>& a);

/// G1 x G2 = 1 - (1 - G2)(1 + G1 G2)^{-1}(1 - G1); throws CompositionSingular
/// when sigma_min(1 + G1 G2) < singular_threshold<Real>().
template <typename Real> [[nodiscard]] CMatrix<Real> compose(const CMatrix<Real>& g1, const CMatrix<Real>& g2);

template <typename Real> struct PostMeasurement {
  MajoranaCorrelation<Real> gamma;
  Real sigma_min;
  bool regularized = false;
};

/// (G_M x G_0) x G_M. On a singular composition the projector is mixed,
/// G_M -> (1 - eta) G_M, at eta = 1e-9 and 1e-8; the two results must agree
/// within 1e-6 or CompositionSingular is thrown.
template <typename Real>
[[nodiscard]] PostMeasurement<Real> post_measurement(const MajoranaCorrelation<Real>& g0,
                                                     const MajoranaCorrelation<Real>& gM);

template <typename Real>
[[nodiscard]] MajoranaCorrelation<Real> post_measurement_gamma(const MajoranaCorrelation<Real>& g0,
                                                               const MajoranaCorrelation<Real>& gM) {
  return post_measurement(g0, gM).gamma;
}

/// Von Neumann entropy (nats) of the modes in `modes`.
template <typename Real>
[[nodiscard]] Real entropy_from_gamma(const MajoranaCorrelation<Real>& g, const Sites& modes);

/// log Tr(rho1 rho2) = (1/2) log |det((1 + G1 G2)/2)| over the given Majorana indices (all if empty).
template <typename Real>
[[nodiscard]] Real log_trace_product(const MajoranaCorrelation<Real>& g1, const MajoranaCorrelation<Real>& g2,
                                     const std::vector<Index>& indices = {});

/// |<a|b>|^2 for pure Gaussian states.
template <typename Real>
[[nodiscard]] Real gaussian_fidelity(const MajoranaCorrelation<Real>& a, const MajoranaCorrelation<Real>& b);

/// log of <psi| prod_i P_i |psi> for the rungs in `measured`.
template <typename Real>
[[nodiscard]] Real log_measurement_probability(const MajoranaCorrelation<Real>& g0, int L, const Sites& measured,
                                               const RungProjector& proj);

/// max |R + R^T|.
template <typename Real> [[nodiscard]] Real antisymmetry_error(const MajoranaCorrelation<Real>& g);

#define FGSWAP_GAUSSIAN_EXTERN(R)                                                                                   \
  extern template MajoranaCorrelation<R> gamma_from_correlation<R>(const CMatrix<R>&);                              \
  extern template CMatrix<R> correlation_from_gamma<R>(const MajoranaCorrelation<R>&);                              \
  extern template MajoranaCorrelation<R> gamma_from_orbitals<R>(const OrbitalMatrix<R>&);                           \
  extern template MajoranaCorrelation<R> gamma_direct_sum<R>(const MajoranaCorrelation<R>&,                         \
                                                             const MajoranaCorrelation<R>&);                        \
  extern template MajoranaCorrelation<R> rung_states_gamma<R>(int,                                                  \
                                                              const std::vector<std::pair<int, RungProjector>>&);   \
  extern template MajoranaCorrelation<R> projector_gamma<R>(int, const Sites&, const RungProjector&);               \
  extern template CMatrix<R> gamma_operator<R>(const MajoranaCorrelation<R>&);                                      \
  extern template R smallest_singular_value<R>(const CMatrix<R>&);                                                  \
  extern template CMatrix<R> compose<R>(const CMatrix<R>&, const CMatrix<R>&);                                      \
  extern template PostMeasurement<R> post_measurement<R>(const MajoranaCorrelation<R>&,                             \
                                                         const MajoranaCorrelation<R>&);                            \
  extern template R entropy_from_gamma<R>(const MajoranaCorrelation<R>&, const Sites&);                             \
  extern template R log_trace_product<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&,              \
                                         const std::vector<Index>&);                                                \
  extern template R gaussian_fidelity<R>(const MajoranaCorrelation<R>&, const MajoranaCorrelation<R>&);             \
  extern template R log_measurement_probability<R>(const MajoranaCorrelation<R>&, int, const Sites&,                \
                                                   const RungProjector&);                                           \
  extern template R antisymmetry_error<R>(const MajoranaCorrelation<R>&);

FGSWAP_GAUSSIAN_EXTERN(double)
FGSWAP_GAUSSIAN_EXTERN(xreal)

#undef FGSWAP_GAUSSIAN_EXTERN

} // namespace fgswap
