// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file protocol.hpp
 * @brief Uniform rung measurements on a bilayer of two Gaussian states,
 *        run on the dense oracle or on correlation matrices.
 */

#pragma once

#include "fgswap/fock.hpp"
#include "fgswap/gaussian.hpp"
#include "fgswap/models.hpp"
#include "fgswap/rung.hpp"
#include "fgswap/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fgswap {

enum class Backend { Oracle, Gaussian };
enum class Precision { Double, Extended, Auto };

[[nodiscard]] const char* to_string(Backend b);
[[nodiscard]] const char* to_string(Precision p);

/// Post-selection probabilities below this are treated as zero.
inline constexpr double kZeroProbability = 1e-12;

/// True when no conditional state is defined: p below `threshold`, or p not positive.
[[nodiscard]] inline bool is_zero_probability(double p, double threshold = kZeroProbability) {
  return !(p > 0.0) || p < threshold;
}

/// Upper and lower layer orbitals, available in both precisions so that the
/// Gaussian backend can escalate without losing accuracy of the input.
struct BilayerSource {
  std::function<OrbitalMatrix<double>()> upper;
  std::function<OrbitalMatrix<double>()> lower;
  std::function<OrbitalMatrix<xreal>()> upper_x;
  std::function<OrbitalMatrix<xreal>()> lower_x;
  bool identical_layers = false;
};

/// Identical copies of an explicit orbital matrix.
[[nodiscard]] BilayerSource copies_of(const OrbitalMatrix<double>& phi);

/// Upper layer from `upper`, lower layer from `lower`, built natively in each precision.
[[nodiscard]] BilayerSource chain_bilayer(const ChainSpec& upper, const ChainSpec& lower);

struct ProtocolResult {
  Backend backend = Backend::Oracle;
  int L = 0;
  Sites measured;
  double probability = 0.0;
  double log_probability = 0.0;
  bool zero_probability = false;
  std::optional<FockState> fock;                       ///< oracle post-state
  std::optional<MajoranaCorrelation<double>> gamma;    ///< Gaussian post-state
  std::map<std::string, double> entropies;             ///< nats, keyed by cut name
  std::optional<double> fidelity_to_ideal;
  bool regularized = false;
  bool extended_precision = false;
  double sigma_min = 0.0;
};

/// Project every rung in `measured` on `proj`. The entropy "A_R" is that of
/// the upper-layer sites outside `measured`. When exactly L/2 rungs are
/// measured the fidelity to [proj on measured][proj.dual() elsewhere] is set.
[[nodiscard]] ProtocolResult run_measurement(const BilayerSource& src, const Sites& measured,
                                             const RungProjector& proj, Backend backend,
                                             Precision precision = Precision::Auto,
                                             double zero_threshold = kZeroProbability);

[[nodiscard]] ProtocolResult run_uniform_measurement(const OrbitalMatrix<double>& phi, const Sites& measured,
                                                     const RungProjector& proj, Backend backend,
                                                     Precision precision = Precision::Auto);

/// Gaussian pipeline at fixed precision. Uses the minor identity for the
/// probability when `minor_probability` holds (identical copies, L/2 rungs).
template <typename Real>
[[nodiscard]] ProtocolResult gaussian_measurement(const OrbitalMatrix<Real>& upper, const OrbitalMatrix<Real>& lower,
                                                  const Sites& measured, const RungProjector& proj,
                                                  bool minor_probability, double zero_threshold = kZeroProbability);

[[nodiscard]] ProtocolResult oracle_measurement(const OrbitalMatrix<double>& upper, const OrbitalMatrix<double>& lower,
                                                const Sites& measured, const RungProjector& proj,
                                                double zero_threshold = kZeroProbability);

/// Product of rung states: proj_measured on `measured`, proj_complement elsewhere.
[[nodiscard]] FockState ideal_bell_product(int L, const Sites& measured, const RungProjector& proj_measured,
                                           const RungProjector& proj_complement);

template <typename Real>
[[nodiscard]] MajoranaCorrelation<Real> ideal_bell_gamma(int L, const Sites& measured,
                                                         const RungProjector& proj_measured,
                                                         const RungProjector& proj_complement);

struct FillingCase {
  int N = 0;
  std::uint64_t seed = 0;
  Sites measured;
  double probability = 0.0;
};

struct FillingReport {
  std::vector<FillingCase> cases;
  bool passed = true;  ///< every N != L/2 case below kZeroProbability
};

/// Sweep N = 0..L at fixed L with random states; off-half fillings must give zero probability.
[[nodiscard]] FillingReport check_filling_selection(int L, const Sites& measured, int seeds, std::uint64_t seed,
                                                    Backend backend);

struct EntropySample {
  Sites measured;
  double probability = 0.0;
  double entropy = 0.0;  ///< nats
  bool excluded = false;
};

struct PartialEntropyReport {
  int L = 0;
  int n_m = 0;
  double predicted = 0.0;  ///< n_m * S_rung, nats
  std::vector<EntropySample> samples;
  int excluded = 0;
  double max_deviation = 0.0;
  bool passed = true;
};

/// Random measured subsets of size n_m (seeded); every retained sample must
/// satisfy S(A_R) = n_m S_rung within `tol`.
[[nodiscard]] PartialEntropyReport partial_measurement_entropy(const BilayerSource& src, int L, int n_m,
                                                               const RungProjector& proj, int trials,
                                                               std::uint64_t seed, Backend backend,
                                                               Precision precision = Precision::Auto,
                                                               double tol = 1e-8);

/// Uniformly random `k`-subset of {0..L-1}, sorted.
[[nodiscard]] Sites random_subset(int L, int k, std::uint64_t seed);

/// Upper layer: ground state at m0; lower layer: ground state at m0 + dm.
/// |+> on the left half; fidelity to |-> on the right half. The outcome is
/// never structurally forbidden here, so only exact zeros are flagged.
[[nodiscard]] ProtocolResult imperfect_copy_run(const ChainSpec& spec, double dm, Backend backend,
                                                Precision precision = Precision::Auto);

#define FGSWAP_PROTOCOL_EXTERN(R)                                                                          \
  extern template ProtocolResult gaussian_measurement<R>(const OrbitalMatrix<R>&, const OrbitalMatrix<R>&, \
                                                         const Sites&, const RungProjector&, bool,         \
                                                         double);                                          \
  extern template MajoranaCorrelation<R> ideal_bell_gamma<R>(int, const Sites&, const RungProjector&,      \
                                                             const RungProjector&);

FGSWAP_PROTOCOL_EXTERN(double)
FGSWAP_PROTOCOL_EXTERN(xreal)

#undef FGSWAP_PROTOCOL_EXTERN

} // namespace fgswap
