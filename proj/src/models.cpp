// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "models_impl.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fgswap {

OrbitalMatrix<double> random_slater(int L, int N, std::uint64_t seed) {
  require(L >= 1 && N >= 0 && N <= L, "need 0 <= N <= L");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, M_SQRT1_2);
  Eigen::MatrixXcd g(N, L);
  for (int q = 0; q < N; ++q)
    for (int i = 0; i < L; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(q, i) = {re, im};
    }
  return orthonormalize_rows<double>(g);
}

double elliptic_K(double k) {
  require(k >= 0.0 && k < 1.0, "elliptic_K needs 0 <= k < 1");
  double a = 1.0, b = std::sqrt((1.0 - k) * (1.0 + k));
  for (int it = 0; it < 60 && std::abs(a - b) > 1e-16 * a; ++it) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

double eisler_level_spacing(double m0) {
  require(m0 > 0.0, "level spacing needs m0 > 0");
  const double s = std::sqrt(1.0 + m0 * m0);
  return 2.0 * std::numbers::pi * elliptic_K(m0 / s) / elliptic_K(1.0 / s);
}

FGSWAP_MODELS_INSTANTIATE(double)

} // namespace fgswap
