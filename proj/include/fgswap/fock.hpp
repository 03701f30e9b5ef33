// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Dense Fock-space oracle for up to 16 fermionic modes.
 *
 * Basis index bit j is the occupation of mode j. The basis state for an
 * occupation set {j1 < j2 < ...} is c_j1^dag c_j2^dag ... |vac>, so c_j^dag
 * acquires the sign (-1)^(number of occupied modes below j).
 *
 * Bilayer states use the block ordering: upper site i is mode i, lower site
 * ibar is mode L + i. Site and mode indices are 0-based.
 */

#pragma once

#include "fgswap/rung.hpp"
#include "fgswap/scalar.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>

namespace fgswap {

inline constexpr int kMaxModes = 16;

enum class Layout { SingleLayer, BilayerBlock };

struct ModeOrdering {
  Layout layout = Layout::SingleLayer;
  int L = 0;

  [[nodiscard]] int num_modes() const { return layout == Layout::BilayerBlock ? 2 * L : L; }
  [[nodiscard]] int upper(int site) const { return site; }
  [[nodiscard]] int lower(int site) const { return L + site; }
};

struct FockState {
  int num_modes = 0;
  Eigen::VectorXcd amplitudes;

  FockState() = default;
  FockState(int m, Eigen::VectorXcd amps);

  [[nodiscard]] static FockState vacuum(int m);
  [[nodiscard]] static FockState basis(int m, std::uint32_t bits);

  [[nodiscard]] std::size_t dim() const { return std::size_t{1} << num_modes; }
  [[nodiscard]] double norm_squared() const { return amplitudes.squaredNorm(); }
};

[[nodiscard]] inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

/// (-1)^(occupied modes of x strictly below mode j).
[[nodiscard]] inline double jw_sign(std::uint32_t x, int j) {
  return (popcount(x & ((1u << j) - 1u)) & 1) ? -1.0 : 1.0;
}

[[nodiscard]] FockState normalized(const FockState& s);
[[nodiscard]] FockState apply_creation(const FockState& s, int mode);
[[nodiscard]] FockState apply_annihilation(const FockState& s, int mode);

/// Majorana operator a_{2j} = c_j + c_j^dag, a_{2j+1} = -i (c_j - c_j^dag).
[[nodiscard]] FockState apply_majorana(const FockState& s, int k);

/// sum_j coeffs(j) c_j^dag applied to s.
[[nodiscard]] FockState apply_orbital_creation(const FockState& s, const Eigen::VectorXcd& coeffs);

/// sum_j conj(coeffs(j)) c_j applied to s.
[[nodiscard]] FockState apply_orbital_annihilation(const FockState& s, const Eigen::VectorXcd& coeffs);

/// Particle number if s is supported on a single Hamming weight.
[[nodiscard]] std::optional<int> particle_number(const FockState& s, double tol = 1e-12);

/// b_1^dag ... b_N^dag |vac> with b_q^dag = sum_i phi(q, i) c_i^dag.
[[nodiscard]] FockState build_slater_state(const OrbitalMatrix<double>& phi);

/// a (modes 0..Ma-1) times b (modes Ma..): all of a's creation operators stand left of b's.
[[nodiscard]] FockState tensor_product(const FockState& a, const FockState& b);

/// Bilayer copy |psi> (x) |psi> with upper-layer operators first.
[[nodiscard]] FockState tensor_double(const FockState& s);

struct Projection {
  FockState state;     ///< P |psi>, unnormalized
  double probability;  ///< || P |psi> ||^2
};

/// Projector |w><w| on rung (rung, L + rung); pair amplitudes indexed by n_i + 2 n_ibar,
/// rung basis (c_i^dag)^n_i (c_ibar^dag)^n_ibar |vac>.
[[nodiscard]] Projection apply_pair_state_projector(const FockState& s, int rung, const Eigen::Vector4cd& pair);
[[nodiscard]] Projection apply_rung_projector(const FockState& s, int rung, const RungProjector& proj);

/// Reduced density matrix on `modes` (kept modes moved to the front with fermionic signs).
[[nodiscard]] Eigen::MatrixXcd reduced_density_matrix(const FockState& s, const Sites& modes);

/// Von Neumann entropy in nats of the reduced state on `modes`.
[[nodiscard]] double entanglement_entropy(const FockState& s, const Sites& modes);

[[nodiscard]] std::complex<double> inner(const FockState& a, const FockState& b);
[[nodiscard]] double fidelity(const FockState& a, const FockState& b);

/// R with i R_kl = <a_k a_l> - delta_kl, evaluated by direct operator application.
[[nodiscard]] Eigen::MatrixXd majorana_correlation(const FockState& s);

} // namespace fgswap
