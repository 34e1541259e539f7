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

#ifndef FEDSADDLE_HARNESS_CONFIG_H_
#define FEDSADDLE_HARNESS_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fedsaddle/algorithms/run.h"
#include "fedsaddle/core/saddle_point.h"

namespace fedsaddle {

// Everything a sweep needs. Defaults reproduce the reference protocol:
// five algorithms, s = 0..15, d = n = 10, lambda = 1e-5, tau = 20,
// grid {0.1, 0.05, 0.01} / max(s, 1), theta = 1, 500 rounds, 5 seeds.
struct ExperimentConfig {
  std::vector<Algorithm> algorithms = {
      Algorithm::kMinibatchMd, Algorithm::kMinibatchMp, Algorithm::kFedAvgS,
      Algorithm::kScaffoldS, Algorithm::kScaffoldCatalystS};
  std::vector<double> s_values = {0, 1, 2,  3,  4,  5,  6,  7,
                                  8, 9, 10, 11, 12, 13, 14, 15};
  int d = 10;
  int n = 10;
  double lambda = 1e-5;
  SyncConfig sync;
  std::vector<double> grid = {0.1, 0.05, 0.01};
  // Divide every grid entry by max(s, 1).
  bool scale_grid = true;
  // FedAvg-S uses gamma / (sqrt(k) + 1) when set.
  bool fedavg_decaying = true;
  double theta = 1.0;
  CatalystConfig::InnerStop catalyst_stop =
      CatalystConfig::InnerStop::kObjectiveDecrease;
  double catalyst_decrease = 0.1;
  int64_t catalyst_max_inner_rounds = 50;
  int64_t catalyst_fixed_rounds = 50;
  int64_t budget = 500;
  int seeds = 5;
  uint64_t master_seed = 0;
  double sigma = 0.0;
  std::string init = "ones";
  std::string output_dir = "results";
  int64_t record_every = 1;
  int jobs = 1;

  // Throws ConfigError on the first violated constraint.
  void Validate() const;
};

// Applies `key = value` lines on top of `base`. Blank lines and text after
// '#' are ignored; lists are comma separated. Unknown keys, bad values and
// setting both `p` and `tau` throw ConfigError. Keys:
//   algorithms, s, d, n, lambda, p, tau, grid, scale_grid, fedavg_decaying,
//   theta, catalyst_stop (decrease|prox|fixed), catalyst_decrease,
//   catalyst_max_inner_rounds, catalyst_fixed_rounds, budget, seeds,
//   master_seed, sigma, init, output, record_every, jobs.
ExperimentConfig ParseConfigText(std::string_view text,
                                 ExperimentConfig base = {});
// IoError when the file cannot be read.
ExperimentConfig LoadConfigFile(const std::string& path,
                                ExperimentConfig base = {});

// "ones", "zeros" or "const:<v>".
SaddlePoint InitialPoint(std::string_view spec, int d);

std::vector<double> ParseDoubleList(std::string_view text);
// s_min, s_min + s_step, ... up to s_max (inclusive, with rounding slack).
std::vector<double> SRange(double s_min, double s_max, double s_step);
CatalystConfig::InnerStop ParseInnerStop(std::string_view name);

}  // namespace fedsaddle

#endif  // FEDSADDLE_HARNESS_CONFIG_H_
