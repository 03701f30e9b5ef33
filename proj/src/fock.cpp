// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/fock.hpp"

#include "fgswap/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fgswap {

namespace {

void check_capacity(int m) {
  if (m < 0 || m > kMaxModes) throw CapacityError("Fock oracle supports at most 16 modes");
}

void check_mode(const FockState& s, int mode) {
  require(mode >= 0 && mode < s.num_modes, "mode index out of range");
}

Sites sorted_unique(const Sites& modes, int m) {
  Sites k = modes;
  std::sort(k.begin(), k.end());
  require(std::adjacent_find(k.begin(), k.end()) == k.end(), "duplicate mode index");
  for (int j : k) require(j >= 0 && j < m, "mode index out of range");
  return k;
}

// Psi(a, b) with a the kept-mode configuration and b the rest, after moving kept modes to the front.
Eigen::MatrixXcd split_amplitudes(const FockState& s, const Sites& kept) {
  const int m = s.num_modes;
  const int k = static_cast<int>(kept.size());
  std::uint32_t kept_mask = 0;
  for (int j : kept) kept_mask |= 1u << j;
  const std::uint32_t rest_mask = ((m == 32) ? ~0u : ((1u << m) - 1u)) & ~kept_mask;
  Sites rest;
  for (int j = 0; j < m; ++j)
    if (!(kept_mask >> j & 1u)) rest.push_back(j);

  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(Index{1} << k, Index{1} << (m - k));
  for (std::uint32_t x = 0; x < s.dim(); ++x) {
    const auto amp = s.amplitudes(x);
    if (amp == 0.0) continue;
    std::uint32_t a = 0, b = 0;
    int swaps = 0;
    for (int p = 0; p < k; ++p)
      if (x >> kept[p] & 1u) {
        a |= 1u << p;
        swaps += popcount(x & rest_mask & ((1u << kept[p]) - 1u));
      }
    for (int q = 0; q < m - k; ++q)
      if (x >> rest[q] & 1u) b |= 1u << q;
    psi(a, b) = (swaps & 1) ? -amp : amp;
  }
  return psi;
}

} // namespace

FockState::FockState(int m, Eigen::VectorXcd amps) : num_modes(m), amplitudes(std::move(amps)) {
  check_capacity(m);
  require(amplitudes.size() == (Index{1} << m), "amplitude vector must have length 2^M");
}

FockState FockState::vacuum(int m) { return basis(m, 0); }

FockState FockState::basis(int m, std::uint32_t bits) {
  check_capacity(m);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Index{1} << m);
  v(bits) = 1.0;
  return {m, std::move(v)};
}

FockState normalized(const FockState& s) {
  const double n = s.amplitudes.norm();
  require(n > 0.0, "cannot normalize the zero vector");
  return {s.num_modes, s.amplitudes / n};
}

FockState apply_creation(const FockState& s, int mode) {
  check_mode(s, mode);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  const std::uint32_t bit = 1u << mode;
  for (std::uint32_t x = 0; x < s.dim(); ++x)
    if (!(x & bit)) out(x | bit) = jw_sign(x, mode) * s.amplitudes(x);
  return {s.num_modes, std::move(out)};
}

FockState apply_annihilation(const FockState& s, int mode) {
  check_mode(s, mode);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  const std::uint32_t bit = 1u << mode;
  for (std::uint32_t x = 0; x < s.dim(); ++x)
    if (x & bit) out(x ^ bit) = jw_sign(x, mode) * s.amplitudes(x);
  return {s.num_modes, std::move(out)};
}

FockState apply_majorana(const FockState& s, int k) {
  require(k >= 0 && k < 2 * s.num_modes, "Majorana index out of range");
  const int j = k / 2;
  const std::uint32_t bit = 1u << j;
  const std::complex<double> i(0.0, 1.0);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  for (std::uint32_t x = 0; x < s.dim(); ++x) {
    std::complex<double> f = jw_sign(x, j);
    if (k & 1) f *= (x & bit) ? -i : i;
    out(x ^ bit) = f * s.amplitudes(x);
  }
  return {s.num_modes, std::move(out)};
}

FockState apply_orbital_creation(const FockState& s, const Eigen::VectorXcd& coeffs) {
  require(coeffs.size() == s.num_modes, "orbital length must equal the mode count");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  for (std::uint32_t x = 0; x < s.dim(); ++x) {
    const auto amp = s.amplitudes(x);
    if (amp == 0.0) continue;
    for (int j = 0; j < s.num_modes; ++j)
      if (!(x >> j & 1u)) out(x | (1u << j)) += coeffs(j) * jw_sign(x, j) * amp;
  }
  return {s.num_modes, std::move(out)};
}

FockState apply_orbital_annihilation(const FockState& s, const Eigen::VectorXcd& coeffs) {
  require(coeffs.size() == s.num_modes, "orbital length must equal the mode count");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  for (std::uint32_t x = 0; x < s.dim(); ++x) {
    const auto amp = s.amplitudes(x);
    if (amp == 0.0) continue;
    for (int j = 0; j < s.num_modes; ++j)
      if (x >> j & 1u) out(x ^ (1u << j)) += std::conj(coeffs(j)) * jw_sign(x, j) * amp;
  }
  return {s.num_modes, std::move(out)};
}

std::optional<int> particle_number(const FockState& s, double tol) {
  std::optional<int> n;
  for (std::uint32_t x = 0; x < s.dim(); ++x) {
    if (std::abs(s.amplitudes(x)) <= tol) continue;
    const int w = popcount(x);
    if (n && *n != w) return std::nullopt;
    n = w;
  }
  return n;
}

FockState build_slater_state(const OrbitalMatrix<double>& phi) {
  const auto L = static_cast<int>(phi.cols());
  check_capacity(L);
  const Eigen::MatrixXcd gram = phi * phi.adjoint();
  require(phi.rows() == 0 ||
              (gram - Eigen::MatrixXcd::Identity(phi.rows(), phi.rows())).cwiseAbs().maxCoeff() <= 1e-10,
          "orbital rows are not orthonormal");
  FockState s = FockState::vacuum(L);
  for (Index q = phi.rows() - 1; q >= 0; --q) s = apply_orbital_creation(s, phi.row(q).transpose());
  return s;
}

FockState tensor_product(const FockState& a, const FockState& b) {
  const int m = a.num_modes + b.num_modes;
  check_capacity(m);
  Eigen::VectorXcd out(Index{1} << m);
  for (std::uint32_t y = 0; y < b.dim(); ++y)
    out.segment(static_cast<Index>(y) << a.num_modes, a.amplitudes.size()) = b.amplitudes(y) * a.amplitudes;
  return {m, std::move(out)};
}

FockState tensor_double(const FockState& s) { return tensor_product(s, s); }

Projection apply_pair_state_projector(const FockState& s, int rung, const Eigen::Vector4cd& pair) {
  require(s.num_modes % 2 == 0, "bilayer state needs an even mode count");
  const int L = s.num_modes / 2;
  require(rung >= 0 && rung < L, "rung index out of range");
  const int up = rung, dn = L + rung;
  const std::uint32_t rung_mask = (1u << up) | (1u << dn);

  // Sign of (c_up^dag)^t_up (c_dn^dag)^t_dn acting on a configuration with the rung empty.
  auto sign = [&](std::uint32_t rest, int t) {
    int n = 0;
    if (t & 2) n += popcount(rest & ((1u << dn) - 1u));
    if (t & 1) n += popcount(rest & ((1u << up) - 1u));
    return (n & 1) ? -1.0 : 1.0;
  };
  auto config = [&](std::uint32_t rest, int t) {
    return rest | ((t & 1) ? (1u << up) : 0u) | ((t & 2) ? (1u << dn) : 0u);
  };

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(s.amplitudes.size());
  for (std::uint32_t rest = 0; rest < s.dim(); ++rest) {
    if (rest & rung_mask) continue;
    std::complex<double> overlap = 0.0;
    for (int t = 0; t < 4; ++t)
      if (pair(t) != 0.0) overlap += std::conj(pair(t)) * sign(rest, t) * s.amplitudes(config(rest, t));
    if (overlap == 0.0) continue;
    for (int t = 0; t < 4; ++t) out(config(rest, t)) = sign(rest, t) * pair(t) * overlap;
  }
  const double p = out.squaredNorm();
  return {FockState(s.num_modes, std::move(out)), p};
}

Projection apply_rung_projector(const FockState& s, int rung, const RungProjector& proj) {
  return apply_pair_state_projector(s, rung, proj.pair_state());
}

Eigen::MatrixXcd reduced_density_matrix(const FockState& s, const Sites& modes) {
  require(!modes.empty(), "empty mode set");
  const Eigen::MatrixXcd psi = split_amplitudes(s, sorted_unique(modes, s.num_modes));
  return psi * psi.adjoint();
}

double entanglement_entropy(const FockState& s, const Sites& modes) {
  require(!modes.empty(), "empty mode set");
  const Eigen::MatrixXcd psi = split_amplitudes(s, sorted_unique(modes, s.num_modes));
  const Eigen::MatrixXcd rho = psi.rows() <= psi.cols() ? Eigen::MatrixXcd(psi * psi.adjoint())
                                                        : Eigen::MatrixXcd(psi.adjoint() * psi);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double S = 0.0;
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-14) S -= p * std::log(p);
  }
  return S;
}

std::complex<double> inner(const FockState& a, const FockState& b) {
  require(a.num_modes == b.num_modes, "mode-count mismatch");
  return a.amplitudes.dot(b.amplitudes);
}

double fidelity(const FockState& a, const FockState& b) { return std::norm(inner(a, b)); }

Eigen::MatrixXd majorana_correlation(const FockState& s) {
  const int n = 2 * s.num_modes;
  Eigen::MatrixXcd v(static_cast<Index>(s.dim()), n);
  for (int k = 0; k < n; ++k) v.col(k) = apply_majorana(s, k).amplitudes;
  Eigen::MatrixXd r = (v.adjoint() * v).imag();
  r.diagonal().setZero();
  return r;
}

} // namespace fgswap
