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

#ifndef FEDSADDLE_HARNESS_EXPERIMENT_H_
#define FEDSADDLE_HARNESS_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fedsaddle/algorithms/run.h"
#include "fedsaddle/harness/config.h"
#include "fedsaddle/harness/csv.h"
#include "fedsaddle/testbed/testbed.h"

namespace fedsaddle {

// One (algorithm, s, stepsize, replicate) run.
struct CellSpec {
  Algorithm algorithm = Algorithm::kScaffoldS;
  double s = 0.0;
  int64_t grid_index = 0;
  int replicate = 0;
  double gamma_l = 0.0;
  double gamma_g = 0.0;
};

struct CellResult {
  CellSpec spec;
  uint64_t instance_seed = 0;
  uint64_t run_seed = 0;
  double final_dist_sq = 0.0;  // +inf when the run diverged
  double final_gap = 0.0;
  int64_t comm_rounds = 0;
  bool diverged = false;
  std::vector<TraceRow> rows;  // empty unless kept
};

// Instance identity depends on (master, s, replicate) only, so every
// algorithm and stepsize sees the same client population.
uint64_t InstanceSeed(uint64_t master_seed, double s, int replicate);
// hash(master, algorithm, s, grid index, replicate).
uint64_t RunSeed(uint64_t master_seed, Algorithm algorithm, double s,
                 int64_t grid_index, int replicate);

// grid[index], divided by max(s, 1) when the grid is scaled.
double GridStepsize(const ExperimentConfig& config, double s, int64_t index);

testbed::TestbedInstance MakeInstance(const ExperimentConfig& config,
                                      double s, int replicate);
AlgorithmConfig MakeAlgorithmConfig(const ExperimentConfig& config,
                                    const CellSpec& cell,
                                    const testbed::TestbedInstance& instance);

// "<algorithm>_s<s>_g<index>_r<replicate>.csv".
std::string TraceFileName(const CellSpec& cell);

// Runs one cell. Catalyst divergence is caught and reported through
// `diverged`, keeping the partial trace.
CellResult RunCell(const ExperimentConfig& config, const CellSpec& cell,
                   bool keep_rows);

// Per (algorithm, s): the grid entry minimizing the seed-averaged final
// dist_sq. Non-finite finals count as +inf. Rows are ordered by algorithm
// (config order) then s.
std::vector<SummaryRow> Summarize(const ExperimentConfig& config,
                                  std::span<const CellResult> cells);

struct ExperimentResult {
  std::vector<CellResult> cells;
  std::vector<SummaryRow> summary;
};

// Fans all cells out over `config.jobs` workers. With `write_files`, each
// cell's trace goes to output_dir/TraceFileName and the summary to
// output_dir/summary.csv. Output does not depend on the worker count.
// Validates the config before running anything.
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               bool write_files = true,
                               bool keep_rows = false);

}  // namespace fedsaddle

#endif  // FEDSADDLE_HARNESS_EXPERIMENT_H_
