// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file slater.hpp
 * @brief Slater minors, post-selection probability, entanglement spectrum
 *        and Pluecker relation residuals.
 *
 * Every permutation sign is the parity of the inversion count of the
 * concatenated index list.
 */

#pragma once

#include "fgswap/errors.hpp"
#include "fgswap/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace fgswap {

/// +1 or -1: parity of the number of inversions of `seq`.
[[nodiscard]] int permutation_sign(const std::vector<int>& seq);

/// Sorted complement of `a` in {0, ..., L-1}.
[[nodiscard]] Sites complement(const Sites& a, int L);

/// {0, ..., n-1}.
[[nodiscard]] Sites iota_sites(int n);

/// det m(rows, cols) for strictly ascending index lists; 1 for an empty selection.
template <typename Real>
[[nodiscard]] Complex<Real> minor_det(const CMatrix<Real>& m, const Sites& rows, const Sites& cols);

/// Delta_A = det phi([N], A).
template <typename Real> [[nodiscard]] Complex<Real> slater_minor(const OrbitalMatrix<Real>& phi, const Sites& a) {
  return minor_det<Real>(phi, iota_sites(static_cast<int>(phi.rows())), a);
}

template <typename Real> struct PostselectProbability {
  Real probability;
  bool half_filled;
};

/// |Delta_{A_L} Delta_{A_R}|^2 with A_R the complement of a_left. Zero, with
/// half_filled = false, when N != L/2.
template <typename Real>
[[nodiscard]] PostselectProbability<Real> postselect_probability(const OrbitalMatrix<Real>& phi, const Sites& a_left);

/// C(A) = phi(:, A)^dag phi(:, A).
template <typename Real>
[[nodiscard]] CMatrix<Real> correlation_submatrix(const OrbitalMatrix<Real>& phi, const Sites& a);

template <typename Real> struct EntanglementSpectrum {
  std::vector<Real> xi;   ///< ascending correlation eigenvalues in [0, 1]
  std::vector<Real> eps;  ///< log((1 - xi)/xi), +inf at xi = 0 and -inf at xi = 1
};

template <typename Real> [[nodiscard]] EntanglementSpectrum<Real> entanglement_spectrum(const CMatrix<Real>& c);

/// log(2 cosh(eps/2)) = |eps|/2 + log(1 + e^{-|eps|}); +inf for infinite eps.
template <typename Real> [[nodiscard]] Real log_two_cosh_half(const Real& eps) {
  using std::abs;
  using std::exp;
  using std::isinf;
  using std::log;
  if (isinf(eps)) return std::numeric_limits<Real>::infinity();
  const Real a = abs(eps);
  return a / 2 + log(Real(1) + exp(-a));
}

/// log P = -2 sum_i log(2 cosh(eps_i / 2)).
template <typename Real> [[nodiscard]] Real log_probability_from_spectrum(const EntanglementSpectrum<Real>& spec) {
  Real s(0);
  for (const auto& e : spec.eps) s -= 2 * log_two_cosh_half<Real>(e);
  return s;
}

/// det of m restricted to `cols` taken in the given order; 0 on repeated columns.
template <typename Derived>
[[nodiscard]] typename Derived::Scalar ordered_minor(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& cols) {
  using Scalar = typename Derived::Scalar;
  if (cols.empty()) return Scalar(1);
  std::vector<int> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Scalar(0);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub = m(Eigen::all, sorted);
  return Scalar(permutation_sign(cols)) * sub.determinant();
}

struct PluckerOptions {
  bool flip_first_term = false;  ///< negative control: corrupt the sum
};

namespace detail {

template <typename Scalar> double relative_residual(const std::vector<Scalar>& terms, bool flip_first) {
  using std::abs;
  Scalar sum(0);
  double largest = 0.0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    sum += (flip_first && t == 0) ? Scalar(-terms[t]) : terms[t];
    largest = std::max(largest, static_cast<double>(abs(terms[t])));
  }
  const auto r = static_cast<double>(abs(sum));
  return largest < 1e-300 ? r : r / largest;
}

inline std::vector<int> sorted_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace detail

/// sum_{l=1}^{N+1} (-1)^l Delta_{A u {j_l}} Delta_{B \ {j_l}}, relative to the largest term.
template <typename Derived>
[[nodiscard]] double plucker_single_residual(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& a,
                                             const std::vector<int>& b, PluckerOptions opts = {}) {
  const auto N = static_cast<std::size_t>(m.rows());
  require(N >= 1 && a.size() == N - 1 && b.size() == N + 1, "Pluecker shape mismatch");
  const auto A = detail::sorted_set(a);
  const auto B = detail::sorted_set(b);
  std::vector<typename Derived::Scalar> terms;
  for (std::size_t l = 0; l < B.size(); ++l) {
    auto left = A;
    left.push_back(B[l]);
    auto right = B;
    right.erase(right.begin() + static_cast<std::ptrdiff_t>(l));
    const double sign = (l % 2 == 0) ? -1.0 : 1.0;
    terms.push_back(sign * ordered_minor(m, left) * ordered_minor(m, right));
  }
  return detail::relative_residual(terms, opts.flip_first_term);
}

/// sum_{C in S, |C| = N-k} sgn(C D) Delta_{E C} Delta_{D F} with D = S \ C.
template <typename Derived>
[[nodiscard]] double plucker_general_residual(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& e,
                                              const std::vector<int>& f, const std::vector<int>& s,
                                              PluckerOptions opts = {}) {
  const auto N = static_cast<std::size_t>(m.rows());
  const std::size_t k = e.size();
  require(N >= 1 && k + 1 <= N && f.size() == N - k - 1 && s.size() == N + 1, "Pluecker shape mismatch");
  const auto E = detail::sorted_set(e);
  const auto F = detail::sorted_set(f);
  const auto S = detail::sorted_set(s);
  std::vector<typename Derived::Scalar> terms;
  const unsigned n = static_cast<unsigned>(S.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != N - k) continue;
    std::vector<int> c, d;
    for (unsigned p = 0; p < n; ++p) ((mask >> p & 1u) ? c : d).push_back(S[p]);
    std::vector<int> cd = c;
    cd.insert(cd.end(), d.begin(), d.end());
    std::vector<int> ec = E;
    ec.insert(ec.end(), c.begin(), c.end());
    std::vector<int> df = d;
    df.insert(df.end(), F.begin(), F.end());
    terms.push_back(double(permutation_sign(cd)) * ordered_minor(m, ec) * ordered_minor(m, df));
  }
  return detail::relative_residual(terms, opts.flip_first_term);
}

struct Theorem1Report {
  bool trivial_state = false;  ///< post-selection probability below 1e-12; checks skipped
  bool overlap_check = false;  ///< amplitudes with A_R and B_R overlapping vanish
  bool modulus_check = false;  ///< disjoint covering amplitudes share one modulus
  bool sign_check = false;     ///< and carry (-1)^{|B_R|} sgn(sigma)
  double probability = 0.0;
  double max_overlap_amplitude = 0.0;
  double max_modulus_deviation = 0.0;
  double max_sign_deviation = 0.0;

  [[nodiscard]] bool passed() const { return trivial_state || (overlap_check && modulus_check && sign_check); }
};

/// Amplitude structure of the remaining state after projecting the doubled
/// state on |+> over a_left, from the dense oracle (L <= 8).
[[nodiscard]] Theorem1Report theorem1_wavefunction_checks(const OrbitalMatrix<double>& phi, const Sites& a_left);

#define FGSWAP_SLATER_EXTERN(R)                                                                              \
  extern template Complex<R> minor_det<R>(const CMatrix<R>&, const Sites&, const Sites&);                     \
  extern template PostselectProbability<R> postselect_probability<R>(const OrbitalMatrix<R>&, const Sites&); \
  extern template CMatrix<R> correlation_submatrix<R>(const OrbitalMatrix<R>&, const Sites&);                \
  extern template EntanglementSpectrum<R> entanglement_spectrum<R>(const CMatrix<R>&);

FGSWAP_SLATER_EXTERN(double)
FGSWAP_SLATER_EXTERN(xreal)

#undef FGSWAP_SLATER_EXTERN

} // namespace fgswap
