// Copyright 2026 The fgswap Authors
// SPDX-License-Identifier: Apache-2.0

#include "fgswap/errors.hpp"
#include "fgswap/experiments.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace fgswap {

namespace {

namespace fs = std::filesystem;

struct Command {
  CLI::App* app = nullptr;
  std::function<Json()> params;
  std::function<void(const Json&)> apply;
  std::function<ExperimentOutput(const CommonOptions&)> run;
};

template <typename P>
Command make_command(CLI::App* app, P& params, ExperimentOutput (*fn)(const P&, const CommonOptions&)) {
  return Command{app, [&params] { return params.to_json(); }, [&params](const Json& j) { params.apply(j); },
                 [&params, fn](const CommonOptions& o) { return fn(params, o); }};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int finish(const Command& cmd, const CommonOptions& common, const std::string& out_dir) {
  const ExperimentOutput res = cmd.run(common);
  fs::create_directories(out_dir);

  Json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["experiment"] = res.name;
  manifest["parameters"] = cmd.params();
  manifest["common"] = common.to_json();
  manifest["outputs"] = Json::array();
  for (const auto& [stem, table] : res.tables) {
    const fs::path p = fs::path(out_dir) / (stem + ".csv");
    write_text(p, to_csv(table));
    manifest["outputs"].push_back({{"path", p.filename().string()}, {"columns", table.columns}, {"rows", table.rows.size()}});
  }
  const fs::path report = fs::path(out_dir) / (res.name + ".report.json");
  write_text(report, res.report.dump(2) + "\n");
  manifest["outputs"].push_back({{"path", report.filename().string()}});
  manifest["passed"] = res.passed;
  manifest["checks"] = res.report.value("checks", Json::array());
  write_text(fs::path(out_dir) / (res.name + ".manifest.json"), manifest.dump(2) + "\n");

  for (const auto& c : manifest["checks"])
    std::cout << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>() << '\n';
  std::cout << res.name << ": " << (res.passed ? "passed" : "FAILED") << " (" << out_dir << ")\n";
  return res.passed ? 0 : 1;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Entanglement swapping experiments on fermionic Gaussian states"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  std::string out_dir = "out";
  std::string config;
  app.add_option("--seed", common.seed, "Base RNG seed");
  app.add_option("--backend", common.backend, "Simulation backend")
      ->check(CLI::IsMember({"auto", "oracle", "gaussian", "both"}));
  app.add_option("--precision", common.precision, "Gaussian arithmetic")
      ->check(CLI::IsMember({"auto", "double", "extended"}));
  app.add_option("--units", common.units, "Entropy units in reports")->check(CLI::IsMember({"nats", "log2"}));
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--config", config, "JSON manifest overriding flags")->check(CLI::ExistingFile);

  std::vector<Command> commands;

  TheoremCheckParams tc;
  auto* s = app.add_subcommand("theorem-check", "Bell projection universality over all half subsets");
  s->add_option("--L", tc.L, "Chain lengths");
  s->add_option("--seeds", tc.seeds, "Random states per length");
  s->add_option("--filling", tc.filling)->check(CLI::IsMember({"half", "off-half"}));
  s->add_option("--state", tc.state)->check(CLI::IsMember({"random", "appendix-b-fixture"}));
  s->add_option("--projector", tc.projector, "plus, minus, eps-plus:<e> or eps-minus:<e>");
  commands.push_back(make_command(s, tc, &run_theorem_check));

  EeSweepParams ee;
  s = app.add_subcommand("ee-sweep", "Entanglement after measuring n_m rungs");
  s->add_option("--mode", ee.mode)->check(CLI::IsMember({"left", "right"}));
  s->add_option("--L", ee.L, "Chain lengths (left mode)");
  s->add_option("--n-m", ee.n_m, "Measured rung counts (right mode)");
  s->add_option("--right-L", ee.right_L, "Chain length (right mode)");
  s->add_option("--state", ee.state)->check(CLI::IsMember({"critical", "random"}));
  s->add_option("--m0", ee.m0);
  s->add_option("--trials", ee.trials);
  commands.push_back(make_command(s, ee, &run_ee_sweep));

  ImperfectBellParams ib;
  s = app.add_subcommand("imperfect-bell", "Partial measurement with epsilon-deformed projectors");
  s->add_option("--L", ib.L);
  s->add_option("--eps", ib.eps);
  s->add_option("--n-m", ib.n_m);
  s->add_option("--state", ib.state)->check(CLI::IsMember({"critical", "random"}));
  s->add_option("--m0", ib.m0);
  s->add_option("--trials", ib.trials);
  commands.push_back(make_command(s, ib, &run_imperfect_bell));

  ImperfectCopyParams ic;
  s = app.add_subcommand("imperfect-copy", "Layers with mismatched masses");
  s->add_option("--m0", ic.m0);
  s->add_option("--dm", ic.dm);
  s->add_option("--L", ic.L);
  commands.push_back(make_command(s, ic, &run_imperfect_copy));

  ProbScalingParams ps;
  s = app.add_subcommand("prob-scaling", "Post-selection probability of massive chains");
  s->add_option("--m0", ps.m0);
  s->add_option("--L", ps.L);
  commands.push_back(make_command(s, ps, &run_prob_scaling));

  PluckerParams pl;
  s = app.add_subcommand("plucker-verify", "Pluecker relation residuals");
  s->add_option("--count", pl.count);
  s->add_option("--shape", pl.shape, "Fixed NxL shape");
  s->add_flag("--inject-fault", pl.inject_fault, "Flip the sign of one term");
  s->add_option("--wavefunction-checks", pl.wavefunction_checks);
  commands.push_back(make_command(s, pl, &run_plucker_verify));

  OracleCompareParams oc;
  s = app.add_subcommand("oracle-compare", "Gaussian backend against the Fock oracle");
  s->add_option("--L", oc.L);
  s->add_option("--seeds", oc.seeds);
  s->add_option("--eps", oc.eps);
  commands.push_back(make_command(s, oc, &run_oracle_compare));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& cmd : commands) {
      if (!cmd.app->parsed()) continue;
      if (!config.empty()) {
        std::ifstream in(config);
        const Json j = Json::parse(in);
        if (j.contains("experiment")) {
          std::string name = cmd.app->get_name();
          std::replace(name.begin(), name.end(), '-', '_');
          require(j.at("experiment").get<std::string>() == name, "config is for another experiment");
        }
        common.apply(j);
        if (j.contains("common")) common.apply(j.at("common"));
        if (j.contains("parameters")) cmd.apply(j.at("parameters"));
      }
      return finish(cmd, common, out_dir);
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace fgswap
