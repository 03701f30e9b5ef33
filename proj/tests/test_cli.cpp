// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/experiments.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fgswap {
namespace {

namespace fs = std::filesystem;

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "fgswap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("fgswap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  fs::path dir;
};

TEST(Csv, Formatting) {
  Table t{{"a", "b", "c"}, {{std::int64_t{3}, 0.1, std::string("x")}, {std::int64_t{-1}, 1e-300, std::string("")}}};
  EXPECT_EQ(to_csv(t), "a,b,c\n3,0.10000000000000001,x\n-1,1e-300,\n");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_sites({0, 3, 5}), "0 3 5");
}

TEST(LinearFit, ExactLine) {
  const auto f = linear_fit({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
}

TEST(Backends, AutoSelection) {
  EXPECT_EQ(resolve_backends("auto", 8), std::vector<Backend>{Backend::Oracle});
  EXPECT_EQ(resolve_backends("auto", 9), std::vector<Backend>{Backend::Gaussian});
  EXPECT_EQ(resolve_backends("both", 4).size(), 2u);
  EXPECT_THROW((void)resolve_backends("gpu", 4), PreconditionError);
}

TEST(Projectors, Parse) {
  EXPECT_NEAR(std::norm(parse_projector("eps-plus:0.6").alpha), 0.8, 1e-15);
  EXPECT_LT(parse_projector("minus").beta.real(), 0.0);
  EXPECT_THROW((void)parse_projector("up"), PreconditionError);
}

TEST_F(Cli, PluckerDefaultPasses) {
  EXPECT_EQ(run({"--out", dir.string(), "plucker-verify"}), 0);
  EXPECT_TRUE(fs::exists(dir / "plucker_verify.csv"));
  const auto manifest = Json::parse(slurp(dir / "plucker_verify.manifest.json"));
  EXPECT_EQ(manifest["schema_version"], kSchemaVersion);
  EXPECT_EQ(manifest["common"]["seed"], 12345);
  EXPECT_TRUE(manifest["passed"].get<bool>());
}

TEST_F(Cli, PluckerMinimalShape) { EXPECT_EQ(run({"--out", dir.string(), "plucker-verify", "--shape", "1x2"}), 0); }

TEST_F(Cli, PluckerFaultFails) {
  EXPECT_EQ(run({"--out", dir.string(), "plucker-verify", "--count", "20", "--inject-fault"}), 1);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"--out", dir.string()}), 2);
  EXPECT_EQ(run({"--out", dir.string(), "no-such-command"}), 2);
  EXPECT_EQ(run({"--backend", "gpu", "plucker-verify"}), 2);
  EXPECT_EQ(run({"--out", dir.string(), "ee-sweep", "--L", "5"}), 2);
  EXPECT_EQ(run({"--out", dir.string(), "--backend", "oracle", "ee-sweep", "--L", "10"}), 2);
  EXPECT_EQ(run({"--out", dir.string(), "plucker-verify", "--shape", "3x2"}), 2);
}

TEST_F(Cli, SwapCheckVariants) {
  EXPECT_EQ(run({"--out", dir.string(), "theorem-check", "--L", "4", "6", "--seeds", "3"}), 0);
  EXPECT_EQ(run({"--out", dir.string(), "theorem-check", "--filling", "off-half", "--L", "4", "6", "--seeds", "2"}), 0);
  EXPECT_EQ(run({"--out", dir.string(), "theorem-check", "--state", "appendix-b-fixture"}), 0);
  const auto report = Json::parse(slurp(dir / "theorem_check.report.json"));
  EXPECT_TRUE(report["checks"][0]["passed"].get<bool>());
}

TEST_F(Cli, EeSweepColumnsAndUnits) {
  EXPECT_EQ(run({"--out", dir.string(), "--backend", "both", "ee-sweep", "--L", "4", "6"}), 0);
  const std::string csv = slurp(dir / "ee_sweep.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "mode,L,n_m,entropy_nats,entropy_log2_units,probability,trials_excluded,seed,backend");
  EXPECT_EQ(run({"--out", dir.string(), "ee-sweep", "--mode", "right", "--right-L", "6", "--n-m", "0", "1", "2", "3",
                 "--state", "random"}),
            0);
}

TEST_F(Cli, ByteIdenticalRerunFromManifest) {
  ASSERT_EQ(run({"--out", (dir / "a").string(), "--seed", "99", "imperfect-bell", "--L", "6", "--eps", "-0.5", "0.5",
                 "--n-m", "0", "1", "3"}),
            0);
  ASSERT_EQ(run({"--out", (dir / "b").string(), "--config", (dir / "a" / "imperfect_bell.manifest.json").string(),
                 "imperfect-bell"}),
            0);
  EXPECT_EQ(slurp(dir / "a" / "imperfect_bell.csv"), slurp(dir / "b" / "imperfect_bell.csv"));
  EXPECT_EQ(slurp(dir / "a" / "imperfect_bell.manifest.json"), slurp(dir / "b" / "imperfect_bell.manifest.json"));
}

TEST_F(Cli, ConfigForOtherExperimentIsRejected) {
  ASSERT_EQ(run({"--out", dir.string(), "plucker-verify", "--count", "5"}), 0);
  EXPECT_EQ(run({"--out", dir.string(), "--config", (dir / "plucker_verify.manifest.json").string(), "prob-scaling"}), 2);
}

TEST_F(Cli, ProbScalingWritesFit) {
  EXPECT_EQ(run({"--out", dir.string(), "prob-scaling", "--m0", "0.5", "1.0", "--L", "4", "6", "8"}), 0);
  const std::string fit = slurp(dir / "prob_scaling_fit.csv");
  EXPECT_EQ(fit.substr(0, fit.find('\n')), "m0,slope,intercept,r_squared,points");
}

TEST_F(Cli, OracleCompareAndImperfectCopy) {
  EXPECT_EQ(run({"--out", dir.string(), "oracle-compare", "--L", "2", "4", "--seeds", "2"}), 0);
  EXPECT_EQ(run({"--out", dir.string(), "imperfect-copy", "--L", "2", "4", "6"}), 0);
  const std::string csv = slurp(dir / "imperfect_copy.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "L,dm,entropy_log2_units,fidelity,probability,backend");
}

} // namespace
} // namespace fgswap
