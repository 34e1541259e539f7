// Copyright 2026 The fedsaddle Authors
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

// Command-line front end: single runs, sweeps, verification and instance
// generation.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fedsaddle/core/errors.h"
#include "fedsaddle/harness/config.h"
#include "fedsaddle/harness/csv.h"
#include "fedsaddle/harness/experiment.h"
#include "fedsaddle/harness/verification.h"
#include "fedsaddle/testbed/testbed.h"

namespace {

using fedsaddle::ExperimentConfig;

// Flags shared by `run` and `sweep`; unset flags leave the config alone.
struct CommonFlags {
  std::string config_path;
  std::optional<double> p;
  std::optional<int> tau;
  std::optional<int64_t> rounds;
  std::optional<double> theta;
  std::optional<uint64_t> seed;
  std::optional<int> seeds;
  std::optional<std::string> init;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<double> lambda;
  std::optional<double> sigma;
  std::optional<int64_t> record_every;
  bool constant_fedavg = false;

  void Register(CLI::App* app) {
    app->add_option("--config", config_path, "key = value config file");
    app->add_option("--p", p, "synchronization probability");
    app->add_option("--tau", tau, "deterministic local steps per round");
    app->add_option("--rounds", rounds, "communication-round budget");
    app->add_option("--theta", theta, "catalyst regularization");
    app->add_option("--seed", seed, "master seed");
    app->add_option("--seeds", seeds, "replicates per cell");
    app->add_option("--init", init, "ones | zeros | const:<v>");
    app->add_option("--d", d, "dimension of x and of y");
    app->add_option("--n", n, "number of clients");
    app->add_option("--lambda", lambda, "primal regularization");
    app->add_option("--sigma", sigma, "gradient noise level");
    app->add_option("--record-every", record_every,
                    "keep every j-th trace row (0: first and last only)");
    app->add_flag("--constant-fedavg", constant_fedavg,
                  "use constant instead of decaying FedAvg-S stepsizes");
    app->get_option("--p")->excludes(app->get_option("--tau"));
  }

  ExperimentConfig Build() const {
    ExperimentConfig config;
    if (!config_path.empty()) config = fedsaddle::LoadConfigFile(config_path);
    if (p) {
      config.sync.probabilistic = true;
      config.sync.p = *p;
    }
    if (tau) {
      config.sync.probabilistic = false;
      config.sync.tau = *tau;
    }
    if (rounds) config.budget = *rounds;
    if (theta) config.theta = *theta;
    if (seed) config.master_seed = *seed;
    if (seeds) config.seeds = *seeds;
    if (init) config.init = *init;
    if (d) config.d = *d;
    if (n) config.n = *n;
    if (lambda) config.lambda = *lambda;
    if (sigma) config.sigma = *sigma;
    if (record_every) config.record_every = *record_every;
    if (constant_fedavg) config.fedavg_decaying = false;
    return config;
  }
};

int RunSingle(const CommonFlags& flags, const std::string& algorithm,
              std::optional<double> s, std::optional<double> gamma_l,
              std::optional<double> gamma_g, const std::string& out) {
  ExperimentConfig config = flags.Build();
  config.algorithms = {fedsaddle::ParseAlgorithm(algorithm)};
  if (s) config.s_values = {*s};
  if (config.s_values.size() != 1) {
    throw fedsaddle::ConfigError("run takes a single s value");
  }
  config.Validate();

  fedsaddle::CellSpec cell;
  cell.algorithm = config.algorithms.front();
  cell.s = config.s_values.front();
  cell.gamma_l =
      gamma_l ? *gamma_l : fedsaddle::GridStepsize(config, cell.s, 0);
  cell.gamma_g = gamma_g ? *gamma_g : cell.gamma_l;

  std::vector<fedsaddle::TraceRow> rows;
  for (int r = 0; r < config.seeds; ++r) {
    cell.replicate = r;
    fedsaddle::CellResult result = fedsaddle::RunCell(config, cell, true);
    std::fprintf(stderr,
                 "replicate %d: seed=%llu rounds=%lld final_dist_sq=%s%s\n", r,
                 static_cast<unsigned long long>(result.run_seed),
                 static_cast<long long>(result.comm_rounds),
                 fedsaddle::FormatDouble(result.final_dist_sq).c_str(),
                 result.diverged ? " (diverged)" : "");
    rows.insert(rows.end(), result.rows.begin(), result.rows.end());
  }
  if (out.empty() || out == "-") {
    fedsaddle::WriteTraceCsv(std::cout, rows);
  } else {
    fedsaddle::WriteTraceCsvFile(out, rows);
  }
  return 0;
}

int RunSweep(const CommonFlags& flags,
             const std::optional<std::string>& algorithms,
             std::optional<double> s_min, std::optional<double> s_max,
             std::optional<double> s_step,
             const std::optional<std::string>& grid,
             const std::optional<std::string>& out, std::optional<int> jobs) {
  ExperimentConfig config = flags.Build();
  if (algorithms) {
    config.algorithms.clear();
    for (const std::string& name : CLI::detail::split(*algorithms, ',')) {
      config.algorithms.push_back(fedsaddle::ParseAlgorithm(name));
    }
  }
  if (s_min || s_max || s_step) {
    config.s_values = fedsaddle::SRange(s_min.value_or(0.0),
                                        s_max.value_or(s_min.value_or(0.0)),
                                        s_step.value_or(1.0));
  }
  if (grid) config.grid = fedsaddle::ParseDoubleList(*grid);
  if (out) config.output_dir = *out;
  if (jobs) config.jobs = *jobs;

  const fedsaddle::ExperimentResult result =
      fedsaddle::RunExperiment(config, true, false);
  fedsaddle::WriteSummaryCsv(std::cout, result.summary);
  std::fprintf(stderr, "%zu cells written to %s\n", result.cells.size(),
               config.output_dir.c_str());
  return 0;
}

int RunVerify(const std::string& suite) {
  bool all_passed = true;
  for (const fedsaddle::CheckResult& result : fedsaddle::RunSuite(suite)) {
    std::cout << fedsaddle::FormatCheck(result) << std::endl;
    all_passed &= result.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Federated saddle-point optimization simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string algorithm;
  std::optional<double> s;
  std::optional<double> gamma_l;
  std::optional<double> gamma_g;
  std::string run_out = "-";
  CLI::App* run = app.add_subcommand("run", "run one algorithm on one s");
  run_flags.Register(run);
  run->add_option("--algorithm", algorithm, "algorithm name")->required();
  run->add_option("--s", s, "heterogeneity level");
  run->add_option("--gamma-l", gamma_l, "local stepsize");
  run->add_option("--gamma-g", gamma_g, "global stepsize (default gamma-l)");
  run->add_option("--out", run_out, "trace CSV path, '-' for stdout");

  CommonFlags sweep_flags;
  std::optional<std::string> sweep_algorithms;
  std::optional<double> s_min;
  std::optional<double> s_max;
  std::optional<double> s_step;
  std::optional<std::string> grid;
  std::optional<std::string> sweep_out;
  std::optional<int> jobs;
  CLI::App* sweep =
      app.add_subcommand("sweep", "stepsize grid x s values x seeds");
  sweep_flags.Register(sweep);
  sweep->add_option("--algorithm", sweep_algorithms,
                    "comma-separated algorithm names");
  sweep->add_option("--s-min", s_min, "first s value");
  sweep->add_option("--s-max", s_max, "last s value");
  sweep->add_option("--s-step", s_step, "s increment");
  sweep->add_option("--grid", grid, "comma-separated base stepsizes");
  sweep->add_option("--out", sweep_out, "output directory");
  sweep->add_option("--jobs", jobs, "worker threads");

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run acceptance checks");
  verify->add_option("--suite", suite, "oracles | identities | convergence | all");

  double gen_s = 0.0;
  int gen_d = 10;
  int gen_n = 10;
  double gen_lambda = 1e-5;
  uint64_t gen_seed = 0;
  std::string gen_out = "-";
  CLI::App* gen = app.add_subcommand("gen-instance", "write a testbed instance");
  gen->add_option("--s", gen_s, "heterogeneity level");
  gen->add_option("--d", gen_d, "dimension of x and of y");
  gen->add_option("--n", gen_n, "number of clients");
  gen->add_option("--lambda", gen_lambda, "primal regularization");
  gen->add_option("--seed", gen_seed, "instance seed");
  gen->add_option("--out", gen_out, "JSON path, '-' for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      return RunSingle(run_flags, algorithm, s, gamma_l, gamma_g, run_out);
    }
    if (*sweep) {
      return RunSweep(sweep_flags, sweep_algorithms, s_min, s_max, s_step, grid,
                      sweep_out, jobs);
    }
    if (*verify) return RunVerify(suite);
    if (*gen) {
      const auto instance = fedsaddle::testbed::GenerateInstance(
          gen_s, gen_d, gen_n, gen_lambda, gen_seed);
      if (gen_out == "-") {
        std::cout << fedsaddle::testbed::InstanceToJson(instance) << '\n';
      } else {
        fedsaddle::testbed::SaveInstance(instance, gen_out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
