// Copyright 2026 The moglb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// moglb: generate instances, run experiments and tune the confidence width.
//
// Exit codes: 0 success, 1 invalid flags or configuration, 2 runtime failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "moglb/config.hpp"
#include "moglb/environment.hpp"
#include "moglb/errors.hpp"
#include "moglb/harness.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr const char* kOutputDirEnv = "MOGLB_OUTPUT_DIR";

fs::path output_dir() {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return ".";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw moglb::ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Flag values land here; only the ones actually given override the config.
struct Flags {
  std::string config_file;
  int d = 0;
  std::size_t m = 0;
  std::size_t horizon = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string algos;
  std::string gamma_mode;
  double c = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
  std::string out;
  std::string instance;
  std::size_t jobs = 0;
  std::size_t max_attempts = 0;
  std::string summary;
  std::string write_config;
  std::string grid;
  std::string report;
};

struct Bound {
  CLI::Option* d = nullptr;
  CLI::Option* m = nullptr;
  CLI::Option* horizon = nullptr;
  CLI::Option* trials = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* algos = nullptr;
  CLI::Option* gamma_mode = nullptr;
  CLI::Option* c = nullptr;
  CLI::Option* delta = nullptr;
  CLI::Option* lambda = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* instance = nullptr;
  CLI::Option* jobs = nullptr;
  CLI::Option* max_attempts = nullptr;
};

Bound add_common(CLI::App* cmd, Flags& f, bool experiment) {
  Bound b;
  cmd->add_option("--config", f.config_file, "Experiment config file (key = value)");
  b.d = cmd->add_option("--d", f.d, "Context dimension (>= 2)");
  b.m = cmd->add_option("--m", f.m, "Number of objectives");
  b.seed = cmd->add_option("--seed", f.seed, "Base seed");
  b.max_attempts = cmd->add_option("--max-attempts", f.max_attempts,
                                   "Arm-set resampling attempts per instance");
  b.out = cmd->add_option("--out", f.out, "Output file");
  if (!experiment) return b;
  b.horizon = cmd->add_option("--T", f.horizon, "Horizon");
  b.trials = cmd->add_option("--trials", f.trials, "Number of trials");
  b.algos = cmd->add_option("--algos", f.algos, "Comma separated: moglb,pucb,sucb,pts");
  b.gamma_mode = cmd->add_option("--gamma", f.gamma_mode, "tuned or theoretical")
                     ->check(CLI::IsMember({"tuned", "theoretical"}));
  b.c = cmd->add_option("--c", f.c, "Tuned confidence scale in [1e-3, 1]");
  b.delta = cmd->add_option("--delta", f.delta, "Confidence level delta in (0, 1)");
  b.lambda = cmd->add_option("--lambda", f.lambda, "Regularizer (default max(1, kappa/2))");
  b.instance = cmd->add_option("--instance", f.instance,
                               "Pin every trial to this instance file");
  b.jobs = cmd->add_option("--jobs", f.jobs, "Worker threads");
  cmd->add_option("--write-config", f.write_config,
                  "Also write the effective config to this file");
  return b;
}

moglb::ExperimentConfig resolve(const Flags& f, const Bound& b) {
  moglb::ExperimentConfig cfg;
  if (!f.config_file.empty()) cfg = moglb::config_from_text(read_file(f.config_file));
  auto given = [](CLI::Option* o) { return o != nullptr && o->count() > 0; };
  if (given(b.d)) cfg.d = f.d;
  if (given(b.m)) cfg.m = f.m;
  if (given(b.horizon)) cfg.horizon = f.horizon;
  if (given(b.trials)) cfg.trials = f.trials;
  if (given(b.seed)) cfg.base_seed = f.seed;
  if (given(b.algos)) cfg.algorithms = moglb::parse_roster(f.algos);
  if (given(b.gamma_mode)) {
    cfg.gamma.kind = f.gamma_mode == "theoretical" ? moglb::GammaMode::Kind::kTheoretical
                                                   : moglb::GammaMode::Kind::kTuned;
  }
  if (given(b.c)) cfg.gamma.c = f.c;
  if (given(b.delta)) cfg.delta = f.delta;
  if (given(b.lambda)) cfg.lambda = f.lambda;
  if (given(b.out)) cfg.output = f.out;
  if (given(b.instance)) cfg.instance = f.instance;
  if (given(b.jobs)) cfg.jobs = f.jobs;
  if (given(b.max_attempts)) cfg.max_attempts = f.max_attempts;
  moglb::validate(cfg);
  return cfg;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      grid.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw moglb::ConfigError("bad grid value '" + item + "'");
    }
  }
  if (grid.empty()) throw moglb::ConfigError("empty --grid");
  return grid;
}

std::optional<moglb::ProblemInstance> pinned_instance(const moglb::ExperimentConfig& cfg) {
  if (cfg.instance.empty()) return std::nullopt;
  return moglb::load_instance(cfg.instance);
}

int cmd_generate(const Flags& f, const Bound& b) {
  const moglb::ExperimentConfig cfg = resolve(f, b);
  moglb::GenerateOptions gen;
  gen.max_attempts = cfg.max_attempts;
  const moglb::ProblemInstance inst =
      moglb::generate_instance(cfg.d, cfg.m, cfg.base_seed, gen);
  const fs::path path = cfg.output.empty() ? output_dir() / "instance.json" : fs::path(cfg.output);
  write_file(path, moglb::instance_to_json(inst));

  std::cout << "wrote " << path.string() << "\n";
  std::cout << "arms: " << inst.num_arms() << "\n";
  std::cout << "true front size: " << inst.true_front.size() << "\n";
  std::cout << "links:";
  for (auto link : inst.links()) std::cout << ' ' << moglb::to_string(link);
  std::cout << "\n";
  return 0;
}

int cmd_run(const Flags& f, const Bound& b) {
  const moglb::ExperimentConfig cfg = resolve(f, b);
  if (!f.write_config.empty()) write_file(f.write_config, moglb::config_to_text(cfg));
  const auto pinned = pinned_instance(cfg);
  const moglb::ExperimentResult result =
      moglb::run_experiment(cfg, pinned ? &*pinned : nullptr);

  const fs::path csv = cfg.output.empty() ? output_dir() / "records.csv" : fs::path(cfg.output);
  std::ostringstream text;
  moglb::write_csv(text, result.records);
  write_file(csv, text.str());

  fs::path summary = f.summary;
  if (summary.empty()) summary = fs::path(csv).replace_extension(".summary.json");
  write_file(summary, moglb::summary_to_json(result.summary, cfg));

  std::cout << "wrote " << result.records.size() << " records to " << csv.string() << "\n";
  for (const auto& a : result.summary.algorithms) {
    const auto& last = a.checkpoints.back();
    std::printf("%-6s PR(%zu) = %.4f +- %.4f", a.algo.c_str(), last.t, last.regret_mean,
                last.regret_std);
    if (last.jaccard_mean) std::printf("  JI = %.3f", *last.jaccard_mean);
    std::printf("\n");
  }
  return 0;
}

int cmd_tune(const Flags& f, const Bound& b) {
  const moglb::ExperimentConfig cfg = resolve(f, b);
  const std::vector<double> grid = parse_grid(f.grid);
  const auto pinned = pinned_instance(cfg);
  const moglb::TuneResult result =
      moglb::tune_gamma(cfg, grid, pinned ? &*pinned : nullptr);

  std::printf("%-12s %-14s %-14s\n", "c", "regret_mean", "regret_std");
  for (const auto& row : result.rows) {
    std::printf("%-12.6g %-14.6f %-14.6f%s\n", row.c, row.regret_mean, row.regret_std,
                row.c == result.best_c ? "  best" : "");
  }
  const fs::path report = f.report.empty() ? output_dir() / "tune.json" : fs::path(f.report);
  write_file(report, moglb::tune_to_json(result));
  std::cout << "best c = " << result.best_c << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective generalized linear bandit experiments"};
  app.require_subcommand(1);
  Flags flags;

  auto* generate = app.add_subcommand("generate", "Draw a problem instance");
  const Bound gen_bound = add_common(generate, flags, false);

  auto* run = app.add_subcommand("run", "Run an experiment and write CSV + summary");
  const Bound run_bound = add_common(run, flags, true);
  run->add_option("--summary", flags.summary, "Summary report path");

  auto* tune = app.add_subcommand("tune-gamma", "Grid-search the tuned confidence scale c");
  const Bound tune_bound = add_common(tune, flags, true);
  tune->add_option("--grid", flags.grid, "Comma separated c values in [1e-3, 1]")
      ->default_val("0.001,0.01,0.1,1");
  tune->add_option("--report", flags.report, "Tuning report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (generate->parsed()) return cmd_generate(flags, gen_bound);
    if (run->parsed()) return cmd_run(flags, run_bound);
    if (tune->parsed()) return cmd_tune(flags, tune_bound);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitValidation;
}
