// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rung.hpp
 * @brief Single-occupancy rung states w^dag = alpha c_i^dag + beta c_ibar^dag.
 */

#pragma once

#include "fgswap/errors.hpp"
#include "fgswap/scalar.hpp"

#include <cmath>
#include <complex>

namespace fgswap {

/// Binary entropy in nats; h(0) = h(1) = 0.
template <typename Real> [[nodiscard]] Real binary_entropy(const Real& p) {
  using std::log;
  Real s(0);
  if (p > Real(0) && p < Real(1)) s -= p * log(p);
  const Real q = Real(1) - p;
  if (q > Real(0) && q < Real(1)) s -= q * log(q);
  return s;
}

struct RungProjector {
  std::complex<double> alpha;
  std::complex<double> beta;

  RungProjector(std::complex<double> a, std::complex<double> b) : alpha(a), beta(b) {
    require(std::abs(std::norm(a) + std::norm(b) - 1.0) <= 1e-12, "rung state not normalized");
  }

  static RungProjector bell_plus() { return {M_SQRT1_2, M_SQRT1_2}; }
  static RungProjector bell_minus() { return {M_SQRT1_2, -M_SQRT1_2}; }

  static RungProjector epsilon_plus(double eps) {
    require(eps >= -1.0 && eps <= 1.0, "epsilon outside [-1, 1]");
    return {std::sqrt((1.0 + eps) / 2.0), std::sqrt((1.0 - eps) / 2.0)};
  }
  static RungProjector epsilon_minus(double eps) {
    require(eps >= -1.0 && eps <= 1.0, "epsilon outside [-1, 1]");
    return {std::sqrt((1.0 - eps) / 2.0), -std::sqrt((1.0 + eps) / 2.0)};
  }

  /// Orthogonal single-occupancy partner (-conj(beta), conj(alpha)).
  [[nodiscard]] RungProjector dual() const { return {-std::conj(beta), std::conj(alpha)}; }

  /// Rung amplitudes indexed by n_i + 2 n_ibar.
  [[nodiscard]] Eigen::Vector4cd pair_state() const { return {0.0, alpha, beta, 0.0}; }

  /// Entanglement of the rung state between the two layers, in nats.
  [[nodiscard]] double rung_entropy() const { return binary_entropy(std::norm(alpha)); }

  /// (alpha, beta) renormalized in the working precision.
  template <typename Real> [[nodiscard]] std::pair<Complex<Real>, Complex<Real>> amplitudes() const {
    using std::sqrt;
    const Complex<Real> a = make_complex<Real>(Real(alpha.real()), Real(alpha.imag()));
    const Complex<Real> b = make_complex<Real>(Real(beta.real()), Real(beta.imag()));
    using std::abs;
    const Real na = abs(a), nb = abs(b);
    const Real n = sqrt(na * na + nb * nb);
    return {a / n, b / n};
  }
};

} // namespace fgswap
