// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/errors.hpp"
#include "fgswap/fock.hpp"
#include "fgswap/gaussian.hpp"
#include "fgswap/models.hpp"
#include "fgswap/protocol.hpp"
#include "fgswap/slater.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace fgswap {
namespace {

using G = MajoranaCorrelation<double>;
constexpr double kLn2 = std::numbers::ln2;

template <typename Derived> double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? double(m.cwiseAbs().maxCoeff()) : 0.0;
}

OrbitalMatrix<double> delocalized() {
  OrbitalMatrix<double> m(1, 2);
  m << M_SQRT1_2, M_SQRT1_2;
  return m;
}

TEST(GammaFromOrbitals, VacuumAndFilled) {
  const auto vac = gamma_from_orbitals<double>(OrbitalMatrix<double>(0, 1));
  EXPECT_EQ(vac.R(0, 1), 1.0);
  EXPECT_EQ(vac.R(1, 0), -1.0);
  EXPECT_NEAR(max_abs(correlation_from_gamma(vac)), 0.0, 1e-15);

  const auto filled = gamma_from_orbitals<double>(OrbitalMatrix<double>::Ones(1, 1));
  EXPECT_EQ(filled.R(0, 1), -1.0);
  EXPECT_NEAR(std::abs(correlation_from_gamma(filled)(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(GammaFromOrbitals, DelocalizedCorrelation) {
  const auto c = correlation_from_gamma(gamma_from_orbitals<double>(delocalized()));
  EXPECT_NEAR(max_abs(c - Eigen::MatrixXcd::Constant(2, 2, 0.5)), 0.0, 1e-15);
}

TEST(GammaFromOrbitals, RejectsNonOrthonormal) {
  OrbitalMatrix<double> bad(1, 2);
  bad << 1.0, 1.0;
  EXPECT_THROW((void)gamma_from_orbitals<double>(bad), PreconditionError);
}

TEST(GammaFromOrbitals, PureAndMatchesFockOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int L = 3 + static_cast<int>(seed % 5);
    const auto phi = random_slater(L, static_cast<int>(seed % (L + 1)), seed);
    const auto g = gamma_from_orbitals<double>(phi);
    EXPECT_LT(antisymmetry_error(g), 1e-12);
    EXPECT_LT(max_abs(g.R * g.R.transpose() - Eigen::MatrixXd::Identity(2 * L, 2 * L)), 1e-10);
    EXPECT_LT(max_abs(correlation_from_gamma(g) - phi.adjoint() * phi), 1e-10);
    EXPECT_LT(max_abs(g.R - majorana_correlation(build_slater_state(phi))), 1e-12);
  }
}

TEST(GammaDouble, Restriction) {
  const auto g = gamma_from_orbitals<double>(random_slater(5, 2, 4));
  const auto d = gamma_double(g);
  EXPECT_EQ(d.num_modes(), 10);
  EXPECT_LT(max_abs(d.R.topLeftCorner(10, 10) - g.R), 1e-12);
  EXPECT_LT(max_abs(d.R.bottomRightCorner(10, 10) - g.R), 1e-12);
  EXPECT_EQ(max_abs(d.R.topRightCorner(10, 10)), 0.0);

  const auto vac = gamma_double(gamma_from_orbitals<double>(OrbitalMatrix<double>(0, 3)));
  EXPECT_LT(max_abs(vac.R - gamma_from_orbitals<double>(OrbitalMatrix<double>(0, 6)).R), 1e-15);
}

TEST(GammaDouble, DelocalizedBlocks) {
  const auto c = correlation_from_gamma(gamma_double(gamma_from_orbitals<double>(delocalized())));
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect.topLeftCorner(2, 2).setConstant(0.5);
  expect.bottomRightCorner(2, 2).setConstant(0.5);
  EXPECT_LT(max_abs(c - expect), 1e-15);
}

TEST(ProjectorGamma, NoRungs) { EXPECT_EQ(max_abs(projector_gamma<double>(3, {}, RungProjector::bell_plus()).R), 0.0); }

TEST(ProjectorGamma, RungBlocks) {
  const auto c = correlation_from_gamma(projector_gamma<double>(1, {0}, RungProjector::bell_plus()));
  EXPECT_LT(max_abs(c - Eigen::MatrixXcd::Constant(2, 2, 0.5)), 1e-15);

  const double e = 0.35;
  const auto ce = correlation_from_gamma(projector_gamma<double>(1, {0}, RungProjector::epsilon_plus(e)));
  Eigen::Matrix2cd expect;
  const double off = std::sqrt(1 - e * e) / 2;
  expect << (1 + e) / 2, off, off, (1 - e) / 2;
  EXPECT_LT(max_abs(ce - expect), 1e-15);
}

TEST(ProjectorGamma, MixedOnUnmeasured) {
  const auto g = projector_gamma<double>(4, {1, 3}, RungProjector::bell_minus());
  for (Index k : majorana_indices({0, 2, 4, 6})) {
    EXPECT_EQ(g.R.row(k).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(g.R.col(k).cwiseAbs().maxCoeff(), 0.0);
  }
  const auto idx = majorana_indices({1, 5});
  Eigen::MatrixXd block(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) block(a, b) = g.R(idx[a], idx[b]);
  EXPECT_LT(max_abs(block * block.transpose() - Eigen::MatrixXd::Identity(4, 4)), 1e-14);
  EXPECT_THROW((void)projector_gamma<double>(4, {4}, RungProjector::bell_plus()), PreconditionError);
}

TEST(ProjectorGamma, MatchesFockRungState) {
  const auto p = RungProjector::epsilon_minus(-0.6);
  FockState s = FockState::vacuum(2);
  Eigen::VectorXcd w(2);
  w << p.alpha, p.beta;
  s = apply_orbital_creation(s, w);
  EXPECT_LT(max_abs(projector_gamma<double>(1, {0}, p).R - majorana_correlation(s)), 1e-14);
}

TEST(Compose, MixedFactorIsNeutral) {
  const auto g = gamma_operator(gamma_from_orbitals<double>(random_slater(4, 2, 8)));
  const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(8, 8);
  EXPECT_LT(max_abs(compose<double>(zero, g) - g), 1e-12);
  EXPECT_LT(max_abs(compose<double>(g, zero) - g), 1e-12);
}

TEST(Compose, PureIsIdempotent) {
  const auto g = gamma_operator(gamma_from_orbitals<double>(random_slater(5, 3, 2)));
  EXPECT_LT(max_abs(compose<double>(g, g) - g), 1e-12);
}

TEST(PostMeasurement, NoMeasurement) {
  const auto g0 = gamma_double(gamma_from_orbitals<double>(random_slater(3, 1, 3)));
  const auto post = post_measurement_gamma(g0, projector_gamma<double>(3, {}, RungProjector::bell_plus()));
  EXPECT_LT(max_abs(post.R - g0.R), 1e-12);
}

TEST(PostMeasurement, DelocalizedPair) {
  const auto g0 = gamma_double(gamma_from_orbitals<double>(delocalized()));
  const auto pm = post_measurement(g0, projector_gamma<double>(2, {0}, RungProjector::bell_plus()));
  EXPECT_FALSE(pm.regularized);
  const auto ideal = ideal_bell_gamma<double>(2, {0}, RungProjector::bell_plus(), RungProjector::bell_minus());
  EXPECT_LT(max_abs(pm.gamma.R - ideal.R), 1e-12);
}

TEST(PostMeasurement, HalfMeasurementEntropy) {
  for (int L : {4, 6, 10, 16}) {
    const auto g0 = gamma_double(gamma_from_orbitals<double>(random_slater(L, L / 2, L)));
    const Sites m = random_subset(L, L / 2, 99);
    const auto post = post_measurement_gamma(g0, projector_gamma<double>(L, m, RungProjector::bell_plus()));
    EXPECT_NEAR(entropy_from_gamma(post, complement(m, L)), (L / 2) * kLn2, 1e-8);
  }
}

TEST(PostMeasurement, DeformedProjectorEntropy) {
  const int L = 8;
  const auto g0 = gamma_double(gamma_from_orbitals<double>(random_slater(L, L / 2, 5)));
  const auto p = RungProjector::epsilon_plus(0.6);
  for (int n = 0; n <= L / 2; ++n) {
    const Sites m = random_subset(L, n, 40 + n);
    const auto post = post_measurement_gamma(g0, projector_gamma<double>(L, m, p));
    EXPECT_NEAR(entropy_from_gamma(post, complement(m, L)), n * p.rung_entropy(), 1e-8);
  }
}

TEST(PostMeasurement, PhysicalOutput) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int L = 6;
    const auto g0 = gamma_double(gamma_from_orbitals<double>(random_slater(L, 3, seed)));
    const Sites m = random_subset(L, 1 + static_cast<int>(seed % 3), seed);
    const auto post = post_measurement_gamma(g0, projector_gamma<double>(L, m, RungProjector::epsilon_minus(0.2)));
    EXPECT_LT(antisymmetry_error(post), 1e-9);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(post.R);
    EXPECT_LE(svd.singularValues().maxCoeff(), 1.0 + 1e-8);
  }
}

TEST(PostMeasurement, ExtendedMatchesDouble) {
  const int L = 6;
  const auto phi = random_slater(L, 3, 21);
  const Sites m{0, 3, 4};
  const auto proj = RungProjector::bell_plus();
  const auto gd = post_measurement_gamma(gamma_double(gamma_from_orbitals<double>(phi)), projector_gamma<double>(L, m, proj));
  const auto phix = orthonormalize_rows<xreal>(convert<xreal, double>(phi));
  const auto gx = post_measurement_gamma(gamma_double(gamma_from_orbitals<xreal>(phix)), projector_gamma<xreal>(L, m, proj));
  EXPECT_LT(max_abs(convert<double, xreal>(gx.R) - gd.R), 1e-10);
}

TEST(PostMeasurement, SingularOutcomeIsRegularizedOrRejected) {
  OrbitalMatrix<double> phi(2, 4);
  const double r6 = std::sqrt(6.0);
  phi << 0.5, 0.5, 0.5, 0.5, r6 / 6, r6 / 6, 0.0, -r6 / 3;
  const auto g0 = gamma_double(gamma_from_orbitals<double>(phi));
  const auto gm = projector_gamma<double>(4, {0, 1}, RungProjector::bell_plus());
  try {
    const auto pm = post_measurement(g0, gm);
    EXPECT_TRUE(pm.regularized);
  } catch (const CompositionSingular& e) {
    EXPECT_LT(e.sigma_min(), 1e-10);
  }
  EXPECT_LT(std::exp(log_measurement_probability<double>(g0, 4, {0, 1}, RungProjector::bell_plus())), 1e-12);
}

TEST(EntropyFromGamma, Basics) {
  const auto g = gamma_from_orbitals<double>(random_slater(6, 3, 1));
  EXPECT_NEAR(entropy_from_gamma(g, iota_sites(6)), 0.0, 1e-10);
  G mixed{Eigen::MatrixXd::Zero(2, 2)};
  EXPECT_NEAR(entropy_from_gamma(mixed, {0}), kLn2, 1e-15);
  EXPECT_EQ(entropy_from_gamma(g, {}), 0.0);
}

TEST(EntropyFromGamma, AgreesWithFockOracle) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto phi = random_slater(4, 2, seed);
    const auto s = tensor_double(build_slater_state(phi));
    const auto g = gamma_double(gamma_from_orbitals<double>(phi));
    for (const Sites& cut : {Sites{0}, Sites{0, 5}, Sites{1, 2, 7}, Sites{3, 4, 5, 6}})
      EXPECT_NEAR(entropy_from_gamma(g, cut), entanglement_entropy(s, cut), 1e-8);
  }
}

TEST(Probability, TraceFormulaMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int L = 4;
    const auto phi = random_slater(L, 2, seed);
    const Sites m = random_subset(L, 1 + static_cast<int>(seed % 2), seed);
    const auto proj = RungProjector::epsilon_plus(0.25);
    const double p = std::exp(log_measurement_probability<double>(gamma_double(gamma_from_orbitals<double>(phi)), L, m, proj));
    EXPECT_NEAR(p, oracle_measurement(phi, phi, m, proj).probability, 1e-12);
  }
}

TEST(Fidelity, GaussianMatchesFock) {
  const auto a = random_slater(4, 2, 1), b = random_slater(4, 2, 2);
  const double fg = gaussian_fidelity(gamma_from_orbitals<double>(a), gamma_from_orbitals<double>(b));
  EXPECT_NEAR(fg, fidelity(build_slater_state(a), build_slater_state(b)), 1e-12);
}

} // namespace
} // namespace fgswap
