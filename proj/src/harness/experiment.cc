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

#include "fedsaddle/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/random.h"

namespace fedsaddle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double FiniteOrInf(double value) { return std::isfinite(value) ? value : kInf; }

std::vector<CellSpec> EnumerateCells(const ExperimentConfig& config) {
  std::vector<CellSpec> cells;
  for (Algorithm algorithm : config.algorithms) {
    for (double s : config.s_values) {
      for (size_t g = 0; g < config.grid.size(); ++g) {
        const double gamma = GridStepsize(config, s, g);
        for (int r = 0; r < config.seeds; ++r) {
          cells.push_back({algorithm, s, static_cast<int64_t>(g), r, gamma,
                           gamma});
        }
      }
    }
  }
  return cells;
}

}  // namespace

uint64_t InstanceSeed(uint64_t master_seed, double s, int replicate) {
  uint64_t seed = MixSeed(master_seed, "instance");
  seed = MixSeed(seed, std::bit_cast<uint64_t>(s));
  return MixSeed(seed, static_cast<uint64_t>(replicate));
}

uint64_t RunSeed(uint64_t master_seed, Algorithm algorithm, double s,
                 int64_t grid_index, int replicate) {
  uint64_t seed = MixSeed(master_seed, AlgorithmName(algorithm));
  seed = MixSeed(seed, std::bit_cast<uint64_t>(s));
  seed = MixSeed(seed, static_cast<uint64_t>(grid_index));
  return MixSeed(seed, static_cast<uint64_t>(replicate));
}

double GridStepsize(const ExperimentConfig& config, double s, int64_t index) {
  if (index < 0 || static_cast<size_t>(index) >= config.grid.size()) {
    throw InvalidInputError("stepsize grid index out of range");
  }
  const double gamma = config.grid[index];
  return config.scale_grid ? gamma / std::max(s, 1.0) : gamma;
}

testbed::TestbedInstance MakeInstance(const ExperimentConfig& config,
                                      double s, int replicate) {
  testbed::TestbedInstance instance =
      testbed::GenerateInstance(s, config.d, config.n, config.lambda,
                                InstanceSeed(config.master_seed, s, replicate));
  instance.set_sigma(config.sigma);
  return instance;
}

AlgorithmConfig MakeAlgorithmConfig(const ExperimentConfig& config,
                                    const CellSpec& cell,
                                    const testbed::TestbedInstance& instance) {
  AlgorithmConfig out;
  out.algorithm = cell.algorithm;
  out.sync = config.sync;
  out.sigma = config.sigma;
  if (cell.algorithm == Algorithm::kFedAvgS && config.fedavg_decaying) {
    out.steps = StepsizeSchedule::Decaying(cell.gamma_l, cell.gamma_g);
  } else {
    out.steps = StepsizeSchedule::Constant(cell.gamma_l, cell.gamma_g);
  }
  out.catalyst.theta = config.theta;
  out.catalyst.stop = config.catalyst_stop;
  out.catalyst.decrease_factor = config.catalyst_decrease;
  out.catalyst.max_inner_rounds = config.catalyst_max_inner_rounds;
  out.catalyst.fixed_rounds = config.catalyst_fixed_rounds;
  out.catalyst.prox = [&instance](const SaddlePoint& anchor, double theta) {
    return testbed::ClosedFormProx(instance, {theta, anchor});
  };
  return out;
}

std::string TraceFileName(const CellSpec& cell) {
  return std::string(AlgorithmName(cell.algorithm)) + "_s" +
         FormatDouble(cell.s) + "_g" + std::to_string(cell.grid_index) +
         "_r" + std::to_string(cell.replicate) + ".csv";
}

CellResult RunCell(const ExperimentConfig& config, const CellSpec& cell,
                   bool keep_rows) {
  CellResult result;
  result.spec = cell;
  result.instance_seed = InstanceSeed(config.master_seed, cell.s,
                                      cell.replicate);
  result.run_seed = RunSeed(config.master_seed, cell.algorithm, cell.s,
                            cell.grid_index, cell.replicate);
  const testbed::TestbedInstance instance =
      MakeInstance(config, cell.s, cell.replicate);
  const SaddlePoint z_star = testbed::OptimalPoint(instance);
  const SaddlePoint z0 = InitialPoint(config.init, config.d);
  const AlgorithmConfig algorithm = MakeAlgorithmConfig(config, cell, instance);

  MetricsContext metrics;
  metrics.algorithm = std::string(AlgorithmName(cell.algorithm));
  metrics.s = cell.s;
  metrics.seed = result.run_seed;
  metrics.gamma = cell.gamma_l;
  metrics.z_star = z_star;
  metrics.record_every = config.record_every;

  Trace trace;
  try {
    trace = RunAlgorithm(algorithm, instance, z0, config.budget,
                         result.run_seed, metrics);
    result.final_dist_sq =
        FiniteOrInf(SquaredDistance(trace.output, z_star));
    result.final_gap = FiniteOrInf(DualityGap(instance, trace.output, z_star));
  } catch (const DivergenceError& e) {
    trace = e.trace();
    result.diverged = true;
    result.final_dist_sq = kInf;
    result.final_gap = kInf;
  }
  result.comm_rounds = trace.comm_rounds;
  if (keep_rows) result.rows = std::move(trace.rows);
  return result;
}

std::vector<SummaryRow> Summarize(const ExperimentConfig& config,
                                  std::span<const CellResult> cells) {
  struct Totals {
    double dist_sq = 0.0;
    double gap = 0.0;
    int64_t count = 0;
    int64_t comm_rounds = 0;
  };
  // (algorithm order, s, grid index) -> totals over replicates.
  std::map<std::tuple<size_t, double, int64_t>, Totals> totals;
  for (const CellResult& cell : cells) {
    const auto order = static_cast<size_t>(
        std::find(config.algorithms.begin(), config.algorithms.end(),
                  cell.spec.algorithm) -
        config.algorithms.begin());
    Totals& t = totals[{order, cell.spec.s, cell.spec.grid_index}];
    t.dist_sq += FiniteOrInf(cell.final_dist_sq);
    t.gap += FiniteOrInf(cell.final_gap);
    t.comm_rounds = std::max(t.comm_rounds, cell.comm_rounds);
    ++t.count;
  }

  std::vector<SummaryRow> summary;
  for (const auto& [key, t] : totals) {
    const auto& [order, s, grid_index] = key;
    const double mean_dist = t.dist_sq / static_cast<double>(t.count);
    const double mean_gap = t.gap / static_cast<double>(t.count);
    const std::string name(AlgorithmName(config.algorithms[order]));
    if (summary.empty() || summary.back().algorithm != name ||
        summary.back().s != s) {
      summary.push_back({name, s, GridStepsize(config, s, grid_index),
                         grid_index, mean_dist, mean_gap, t.count,
                         t.comm_rounds});
      continue;
    }
    SummaryRow& best = summary.back();
    // Strict improvement keeps the first grid entry on ties.
    if (mean_dist < best.mean_final_dist_sq) {
      best.best_gamma = GridStepsize(config, s, grid_index);
      best.best_grid_index = grid_index;
      best.mean_final_dist_sq = mean_dist;
      best.mean_final_gap = mean_gap;
      best.seeds = t.count;
      best.comm_rounds = t.comm_rounds;
    }
  }
  return summary;
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               bool write_files, bool keep_rows) {
  config.Validate();
  const std::vector<CellSpec> specs = EnumerateCells(config);
  const std::filesystem::path dir(config.output_dir);
  if (write_files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
      throw IoError("cannot create output directory '" + config.output_dir +
                    "'");
    }
  }

  ExperimentResult result;
  result.cells.resize(specs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const size_t index = next.fetch_add(1);
      if (index >= specs.size()) return;
      try {
        CellResult cell = RunCell(config, specs[index], keep_rows || write_files);
        if (write_files) {
          WriteTraceCsvFile((dir / TraceFileName(cell.spec)).string(),
                            cell.rows);
          if (!keep_rows) cell.rows.clear();
        }
        result.cells[index] = std::move(cell);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(specs.size());
        return;
      }
    }
  };
  const int workers =
      std::max(1, std::min<int>(config.jobs, static_cast<int>(specs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (std::thread& thread : threads) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = Summarize(config, result.cells);
  if (write_files) {
    WriteSummaryCsvFile((dir / "summary.csv").string(), result.summary);
  }
  return result;
}

}  // namespace fedsaddle
