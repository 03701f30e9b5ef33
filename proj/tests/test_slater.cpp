// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/experiments.hpp"
#include "fgswap/models.hpp"
#include "fgswap/protocol.hpp"
#include "fgswap/slater.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace fgswap {
namespace {

Eigen::MatrixXcd random_matrix(int n, int l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(n, l);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < l; ++j) {
      const double re = g(rng);
      m(i, j) = {re, g(rng)};
    }
  return m;
}

std::vector<Sites> half_subsets(int L) {
  std::vector<Sites> out;
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    if (__builtin_popcount(mask) * 2 != L) continue;
    Sites s;
    for (int j = 0; j < L; ++j)
      if (mask >> j & 1u) s.push_back(j);
    out.push_back(s);
  }
  return out;
}

TEST(PermutationSign, Inversions) {
  EXPECT_EQ(permutation_sign({}), 1);
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
  EXPECT_EQ(permutation_sign({3, 2, 1, 0}), 1);
}

TEST(Minor, Basics) {
  const CMatrix<double> id = CMatrix<double>::Identity(3, 3);
  EXPECT_EQ(minor_det<double>(id, {0, 1, 2}, {0, 1, 2}), 1.0);
  EXPECT_EQ(minor_det<double>(id, {}, {}), 1.0);
  CMatrix<double> dup = random_matrix(2, 3, 1);
  dup.col(2) = dup.col(0);
  EXPECT_LT(std::abs(minor_det<double>(dup, {0, 1}, {0, 2})), 1e-15);
  EXPECT_LT(std::abs(slater_minor<double>(vanishing_minor_orbitals(), {0, 1})), 1e-15);
  EXPECT_THROW((void)minor_det<double>(id, {0, 1}, {0}), PreconditionError);
  EXPECT_THROW((void)minor_det<double>(id, {1, 0}, {0, 1}), PreconditionError);
}

TEST(Minor, BlockMultiplicativity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = random_matrix(2, 3, seed), b = random_matrix(3, 4, seed + 50);
    CMatrix<double> m = CMatrix<double>::Zero(5, 7);
    m.topLeftCorner(2, 3) = a;
    m.bottomRightCorner(3, 4) = b;
    const auto full = minor_det<double>(m, {0, 1, 2, 3, 4}, {0, 2, 3, 5, 6});
    const auto prod = minor_det<double>(a, {0, 1}, {0, 2}) * minor_det<double>(b, {0, 1, 2}, {0, 2, 3});
    EXPECT_LT(std::abs(full - prod), 1e-12 * std::max(1.0, std::abs(prod)));
  }
}

TEST(PostselectProbability, Delocalized) {
  OrbitalMatrix<double> phi(1, 2);
  phi << M_SQRT1_2, M_SQRT1_2;
  const auto p = postselect_probability<double>(phi, {0});
  EXPECT_TRUE(p.half_filled);
  EXPECT_NEAR(p.probability, 0.25, 1e-15);
}

TEST(PostselectProbability, VanishingMinorFixture) {
  const auto phi = vanishing_minor_orbitals();
  EXPECT_LT(postselect_probability<double>(phi, {0, 1}).probability, 1e-30);
  bool any_positive = false;
  for (const auto& a : half_subsets(4))
    if (postselect_probability<double>(phi, a).probability > 1e-6) any_positive = true;
  EXPECT_TRUE(any_positive);
}

TEST(PostselectProbability, NotHalfFilled) {
  const auto p = postselect_probability<double>(random_slater(4, 1, 3), {0, 1});
  EXPECT_FALSE(p.half_filled);
  EXPECT_EQ(p.probability, 0.0);
}

// Phi = Phi_G (+) Phi_Gc: positive only for half-filled even blocks cut in half.
TEST(PostselectProbability, SeparableStates) {
  std::mt19937_64 rng(77);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    const int g = std::uniform_int_distribution<int>(1, 5)(rng);
    const int gc = std::uniform_int_distribution<int>(1, 5)(rng);
    if ((g + gc) % 2) continue;
    const int L = g + gc;
    const int ng = std::uniform_int_distribution<int>(0, g)(rng);
    const int ngc = L / 2 - ng;
    if (ngc < 0 || ngc > gc) continue;
    OrbitalMatrix<double> phi = OrbitalMatrix<double>::Zero(L / 2, L);
    phi.block(0, 0, ng, g) = random_slater(g, ng, rng());
    phi.block(ng, g, ngc, gc) = random_slater(gc, ngc, rng());
    const Sites a = random_subset(L, L / 2, rng());
    const auto p = postselect_probability<double>(phi, a).probability;
    const int in_g = static_cast<int>(std::count_if(a.begin(), a.end(), [g](int i) { return i < g; }));
    const bool symmetric = g % 2 == 0 && 2 * ng == g && 2 * in_g == g;
    if (symmetric) {
      EXPECT_GT(p, 0.0);
      ++positives;
    } else {
      EXPECT_LT(p, 1e-12);
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(CorrelationSubmatrix, Basics) {
  const auto phi = random_slater(6, 2, 8);
  const auto c = correlation_submatrix<double>(phi, iota_sites(6));
  EXPECT_LT((c * c - c).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(c.trace().real(), 2.0, 1e-12);

  OrbitalMatrix<double> d(1, 2);
  d << M_SQRT1_2, M_SQRT1_2;
  EXPECT_NEAR(std::abs(correlation_submatrix<double>(d, {0})(0, 0) - 0.5), 0.0, 1e-15);
}

TEST(CorrelationSubmatrix, ComplementaryCutsShareSpectrum) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int L = 8;
    const auto phi = random_slater(L, L / 2, seed);
    const Sites a = random_subset(L, L / 2, seed + 1);
    const auto sa = entanglement_spectrum<double>(correlation_submatrix<double>(phi, a));
    const auto sb = entanglement_spectrum<double>(correlation_submatrix<double>(phi, complement(a, L)));
    const auto n = sa.xi.size();
    ASSERT_EQ(sb.xi.size(), n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(sa.xi[k], 1.0 - sb.xi[n - 1 - k], 1e-10);
      EXPECT_GE(sa.xi[k], 0.0);
      EXPECT_LE(sa.xi[k], 1.0 + 1e-10);
    }
  }
}

TEST(EntanglementSpectrum, Formula) {
  CMatrix<double> c(2, 2);
  c << 0.5, 0, 0, 1.0 / (std::exp(1.0) + 1.0);
  const auto s = entanglement_spectrum<double>(c);
  ASSERT_EQ(s.eps.size(), 2u);
  EXPECT_NEAR(s.eps[0], 1.0, 1e-12);
  EXPECT_NEAR(s.eps[1], 0.0, 1e-15);
  EXPECT_LT(s.xi[0], s.xi[1]);

  CMatrix<double> ends(2, 2);
  ends << 1.0, 0, 0, 0.0;
  const auto e = entanglement_spectrum<double>(ends);
  EXPECT_EQ(e.eps[0], std::numeric_limits<double>::infinity());
  EXPECT_EQ(e.eps[1], -std::numeric_limits<double>::infinity());

  CMatrix<double> bad(2, 2);
  bad << 0.5, 0.1, 0.3, 0.5;
  EXPECT_THROW((void)entanglement_spectrum<double>(bad), PreconditionError);
}

TEST(EntanglementSpectrum, CriticalChainIsSymmetric) {
  for (int L : {4, 8, 12}) {
    const auto phi = ground_state_orbitals<double>(ChainSpec{L, 0.0, -1});
    const auto s = entanglement_spectrum<double>(correlation_submatrix<double>(phi, iota_sites(L / 2)));
    const auto n = s.eps.size();
    // levels beyond |eps| ~ 10 are below double resolution of xi
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(s.eps[k]) < 10.0) EXPECT_NEAR(s.eps[k], -s.eps[n - 1 - k], 1e-8);
  }
}

TEST(LogProbability, Values) {
  EntanglementSpectrum<double> one{{0.5}, {0.0}};
  EXPECT_NEAR(log_probability_from_spectrum(one), -2 * std::log(2.0), 1e-15);
  const double inf = std::numeric_limits<double>::infinity();
  EntanglementSpectrum<double> trivial{{0.0, 1.0}, {inf, -inf}};
  EXPECT_EQ(log_probability_from_spectrum(trivial), -inf);
  EXPECT_EQ(std::exp(log_probability_from_spectrum(trivial)), 0.0);
}

TEST(LogProbability, TermBounds) {
  for (double e = -60.0; e <= 60.0; e += 0.37) {
    const double t = log_two_cosh_half(e);
    EXPECT_GE(t, std::abs(e) / 2);
    EXPECT_LE(t, std::abs(e) / 2 + std::log(2.0) + 1e-15);
    EXPECT_NEAR(t, std::log(2 * std::cosh(e / 2)), 1e-12 * std::max(1.0, t));
  }
}

TEST(IdentityChain, MinorsSpectrumAndOracle) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int L = 2 + 2 * static_cast<int>(seed % 4);
    const auto phi = random_slater(L, L / 2, 5000 + seed);
    const Sites a = random_subset(L, L / 2, seed);
    const double p_minor = postselect_probability<double>(phi, a).probability;
    const double p_spec =
        std::exp(log_probability_from_spectrum(entanglement_spectrum<double>(correlation_submatrix<double>(phi, a))));
    const double p_oracle = oracle_measurement(phi, phi, a, RungProjector::bell_plus()).probability;
    EXPECT_NEAR(p_spec, p_minor, 1e-9 * p_minor);
    EXPECT_NEAR(p_oracle, p_minor, 1e-9 * p_minor);
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Plucker, SmallestInstance) {
  const auto m = random_matrix(1, 2, 3);
  EXPECT_LT(plucker_single_residual(m, {}, {0, 1}), 1e-15);
}

TEST(Plucker, RandomTwoByFour) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_matrix(2, 4, seed);
    EXPECT_LT(plucker_single_residual(m, {static_cast<int>(seed % 4)}, {0, 1, 3}), 1e-12);
  }
}

TEST(Plucker, AllOnesIsExactlyZero) {
  const Eigen::MatrixXd m = Eigen::MatrixXd::Ones(3, 6);
  EXPECT_EQ(plucker_single_residual(m, {0, 4}, {1, 2, 3, 5}), 0.0);
}

TEST(Plucker, GeneralReducesToSingle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_matrix(3, 7, seed);
    const Sites a = random_subset(7, 2, seed), b = random_subset(7, 4, seed + 9);
    EXPECT_NEAR(plucker_general_residual(m, a, {}, b), plucker_single_residual(m, a, b), 1e-12);
  }
}

TEST(Plucker, GeneralRandomThreeBySix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = random_matrix(3, 6, seed);
    EXPECT_LT(plucker_general_residual(m, random_subset(6, 1, seed), random_subset(6, 1, seed + 1),
                                       random_subset(6, 4, seed + 2)),
              1e-11);
  }
}

TEST(Plucker, ExtendedIdentity) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 6);
  m.leftCols(3).setIdentity();
  m.rightCols(3) = Eigen::MatrixXd::Random(3, 3);
  EXPECT_LT(plucker_general_residual(m, {0, 4}, {}, {1, 2, 3, 5}), 1e-15);
}

TEST(Plucker, OverlapsGiveZeroMinors) {
  const auto m = random_matrix(3, 6, 4);
  EXPECT_LT(plucker_general_residual(m, {1}, {2}, {1, 2, 3, 4}), 1e-12);
}

TEST(Plucker, SweepOverShapes) {
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 200; ++t) {
    const int N = std::uniform_int_distribution<int>(1, 4)(rng);
    const int L = std::uniform_int_distribution<int>(N + 1, 8)(rng);
    const auto m = random_matrix(N, L, rng());
    EXPECT_LT(plucker_single_residual(m, random_subset(L, N - 1, rng()), random_subset(L, N + 1, rng())), 1e-10);
    const int k = std::uniform_int_distribution<int>(0, N - 1)(rng);
    EXPECT_LT(plucker_general_residual(m, random_subset(L, k, rng()), random_subset(L, N - k - 1, rng()),
                                       random_subset(L, N + 1, rng())),
              1e-10);
  }
}

TEST(Plucker, FaultInjectionIsDetected) {
  const auto m = random_matrix(2, 4, 12);
  EXPECT_GT(plucker_single_residual(m, {0}, {1, 2, 3}, PluckerOptions{true}), 1e-3);
}

TEST(Plucker, ShapeMismatch) {
  const auto m = random_matrix(2, 4, 1);
  EXPECT_THROW((void)plucker_single_residual(m, {0, 1}, {1, 2, 3}), PreconditionError);
  EXPECT_THROW((void)plucker_general_residual(m, {0}, {1}, {1, 2}), PreconditionError);
}

TEST(WavefunctionChecks, Delocalized) {
  OrbitalMatrix<double> phi(1, 2);
  phi << M_SQRT1_2, M_SQRT1_2;
  const auto r = theorem1_wavefunction_checks(phi, {0});
  EXPECT_FALSE(r.trivial_state);
  EXPECT_TRUE(r.overlap_check);
  EXPECT_TRUE(r.modulus_check);
  EXPECT_TRUE(r.sign_check);
}

TEST(WavefunctionChecks, RandomStates) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = theorem1_wavefunction_checks(random_slater(6, 3, seed), random_subset(6, 3, seed + 3));
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.trivial_state);
  }
}

TEST(WavefunctionChecks, VanishingMinorIsTrivial) {
  const auto r = theorem1_wavefunction_checks(vanishing_minor_orbitals(), {0, 1});
  EXPECT_TRUE(r.trivial_state);
  EXPECT_TRUE(r.passed());
}

TEST(ExtendedPrecision, AgreesWithDouble) {
  const auto phi = random_slater(8, 4, 6);
  const auto phix = orthonormalize_rows<xreal>(convert<xreal, double>(phi));
  const Sites a{1, 2, 5, 7};
  const double pd = postselect_probability<double>(phi, a).probability;
  const double px = to_double(postselect_probability<xreal>(phix, a).probability);
  EXPECT_NEAR(px, pd, 1e-12 * pd);
}

} // namespace
} // namespace fgswap
