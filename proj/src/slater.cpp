// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "slater_impl.hpp"

#include "fgswap/fock.hpp"
#include "fgswap/rung.hpp"

namespace fgswap {

int permutation_sign(const std::vector<int>& seq) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

Sites complement(const Sites& a, int L) {
  std::vector<bool> in(static_cast<std::size_t>(L), false);
  for (int j : a) {
    require(j >= 0 && j < L, "site index out of range");
    in[static_cast<std::size_t>(j)] = true;
  }
  Sites out;
  for (int j = 0; j < L; ++j)
    if (!in[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

Sites iota_sites(int n) {
  Sites s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = j;
  return s;
}

Theorem1Report theorem1_wavefunction_checks(const OrbitalMatrix<double>& phi, const Sites& a_left) {
  const auto L = static_cast<int>(phi.cols());
  const auto N = static_cast<int>(phi.rows());
  require(L % 2 == 0 && 2 * N == L, "half filling required");
  require(L <= 8, "oracle check limited to L <= 8");
  require(static_cast<int>(a_left.size()) == N, "a_left must hold L/2 sites");
  Sites left = a_left;
  std::sort(left.begin(), left.end());
  const Sites right = complement(left, L);

  const auto plus = RungProjector::bell_plus();
  FockState psi = tensor_double(build_slater_state(phi));
  std::uint32_t measured = 0;
  for (int i : left) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(2 * L);
    w(i) = plus.alpha;
    w(L + i) = plus.beta;
    psi = apply_orbital_annihilation(psi, w);
    measured |= (1u << i) | (1u << (L + i));
  }
  for (std::uint32_t x = 0; x < psi.dim(); ++x)
    if (x & measured) psi.amplitudes(x) = 0.0;

  Theorem1Report rep;
  rep.probability = psi.norm_squared();
  if (rep.probability < 1e-12) {
    rep.trivial_state = true;
    return rep;
  }
  psi = normalized(psi);

  const std::uint32_t layer = (1u << L) - 1u;
  std::uint32_t right_mask = 0;
  for (int i : right) right_mask |= 1u << i;
  const double modulus = std::pow(2.0, -0.5 * static_cast<double>(right.size()));
  const std::complex<double> ref = psi.amplitudes(right_mask);

  for (std::uint32_t x = 0; x < psi.dim(); ++x) {
    if (x & measured) continue;
    const std::uint32_t A = x & layer, B = (x >> L) & layer;
    const std::complex<double> amp = psi.amplitudes(x);
    if (A & B) {
      rep.max_overlap_amplitude = std::max(rep.max_overlap_amplitude, std::abs(amp));
    } else if ((A | B) == right_mask) {
      rep.max_modulus_deviation = std::max(rep.max_modulus_deviation, std::abs(std::abs(amp) - modulus));
      int n = popcount(B);
      for (int b = 0; b < L; ++b)
        if (B >> b & 1u) n += popcount(A >> (b + 1));
      const double s = (n & 1) ? -1.0 : 1.0;
      rep.max_sign_deviation = std::max(rep.max_sign_deviation, std::abs(amp - s * ref));
    }
  }
  rep.overlap_check = rep.max_overlap_amplitude < 1e-10;
  rep.modulus_check = rep.max_modulus_deviation < 1e-10;
  rep.sign_check = rep.max_sign_deviation < 1e-10;
  return rep;
}

FGSWAP_SLATER_INSTANTIATE(double)

} // namespace fgswap
