// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file experiments.hpp
 * @brief Experiment drivers behind the command-line tool. Each driver returns
 *        its tables and a JSON report; writing files is left to the caller.
 */

#pragma once

#include "fgswap/protocol.hpp"

#include "json.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fgswap {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, "inf", "-inf", "nan".
[[nodiscard]] std::string format_double(double x);
[[nodiscard]] std::string to_csv(const Table& t);

/// Space-separated 0-based indices.
[[nodiscard]] std::string format_sites(const Sites& s);

/// splitmix64 fold of `parts` into `seed`.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts);

struct CommonOptions {
  std::uint64_t seed = 12345;
  std::string backend = "auto";  ///< auto | oracle | gaussian | both
  std::string precision = "auto";
  std::string units = "log2";

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct ExperimentOutput {
  std::string name;
  std::vector<std::pair<std::string, Table>> tables;  ///< file stem, table
  Json report;
  bool passed = true;
};

struct TheoremCheckParams {
  std::vector<int> L{4, 6, 8};
  int seeds = 50;
  std::string filling = "half";  ///< half | off-half
  std::string state = "random";  ///< random | appendix-b-fixture
  std::string projector = "plus";

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct EeSweepParams {
  std::string mode = "left";  ///< left: n_m = L/2 over L; right: fixed L over n_m
  std::vector<int> L{4, 6, 8, 10, 12};
  std::vector<int> n_m{0, 1, 2, 3};
  int right_L = 6;
  std::string state = "critical";  ///< critical | random
  double m0 = 0.0;
  int trials = 3;

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct ImperfectBellParams {
  int L = 10;
  std::vector<double> eps{-0.9, -0.5, 0.0, 0.5, 0.9};
  std::vector<int> n_m{0, 1, 2, 3, 4, 5};
  std::string state = "critical";
  double m0 = 0.0;
  int trials = 3;

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct ImperfectCopyParams {
  double m0 = 0.3;
  std::vector<double> dm{0.0, 0.05, 0.1};
  std::vector<int> L{2, 4, 6, 8, 10, 12};

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct ProbScalingParams {
  std::vector<double> m0{0.5, 1.0, 1.5};
  std::vector<int> L{4, 6, 8, 10, 12};

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct PluckerParams {
  int count = 200;
  std::string shape;  ///< "NxL" fixes the matrix shape
  bool inject_fault = false;
  int wavefunction_checks = 20;

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct OracleCompareParams {
  std::vector<int> L{2, 4, 6};
  int seeds = 5;
  double eps = 0.6;

  [[nodiscard]] Json to_json() const;
  void apply(const Json& j);
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

[[nodiscard]] LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

[[nodiscard]] ExperimentOutput run_theorem_check(const TheoremCheckParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_ee_sweep(const EeSweepParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_imperfect_bell(const ImperfectBellParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_imperfect_copy(const ImperfectCopyParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_prob_scaling(const ProbScalingParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_plucker_verify(const PluckerParams& p, const CommonOptions& o);
[[nodiscard]] ExperimentOutput run_oracle_compare(const OracleCompareParams& p, const CommonOptions& o);

/// The 2 x 4 orbital matrix whose split {0, 1} has a vanishing minor.
[[nodiscard]] OrbitalMatrix<double> vanishing_minor_orbitals();

/// Backends to run at size L for a --backend value.
[[nodiscard]] std::vector<Backend> resolve_backends(const std::string& backend, int L);
[[nodiscard]] Precision parse_precision(const std::string& s);
[[nodiscard]] RungProjector parse_projector(const std::string& s);

/// Full command-line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv);

} // namespace fgswap
