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

#ifndef FEDSADDLE_ALGORITHMS_RUN_H_
#define FEDSADDLE_ALGORITHMS_RUN_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fedsaddle/algorithms/stepsize.h"
#include "fedsaddle/algorithms/sync_schedule.h"
#include "fedsaddle/algorithms/trace.h"
#include "fedsaddle/core/problem.h"

namespace fedsaddle {

enum class Algorithm {
  kMinibatchMd,
  kMinibatchMp,
  kFedAvgS,
  kScaffoldS,
  kScaffoldCatalystS,
};

// "minibatch-md", "minibatch-mp", "fedavg-s", "scaffold-s",
// "scaffold-catalyst-s".
std::string_view AlgorithmName(Algorithm algorithm);
// Throws ConfigError for unknown names.
Algorithm ParseAlgorithm(std::string_view name);

struct SyncConfig {
  bool probabilistic = false;
  double p = 0.05;
  int tau = 20;

  // Coin stream seeded from `seed` in probabilistic mode.
  SyncSchedule Make(uint64_t seed) const;
  // Local steps per round for the minibatch methods: tau, or round(1/p).
  int BatchSteps() const;
};

// exact(z_bar, theta) for the catalyst subproblem.
using ProxOracle =
    std::function<SaddlePoint(const SaddlePoint& anchor, double theta)>;

struct CatalystConfig {
  enum class InnerStop {
    kFixedRounds,        // exactly `fixed_rounds` inner rounds
    kProxDistance,       // ||z~ - prox(z_bar)||^2 <= (mu / (2(theta+mu)))^2 eps
    kObjectiveDecrease,  // ||G^theta(z~)|| <= decrease_factor ||G(z_bar)||
  };

  double theta = 1.0;
  InnerStop stop = InnerStop::kObjectiveDecrease;
  int64_t fixed_rounds = 50;
  double epsilon = 1e-8;
  double decrease_factor = 0.1;
  // Cap on inner rounds for the kProxDistance and kObjectiveDecrease rules.
  int64_t max_inner_rounds = 50;
  // 0 means no limit beyond the round budget.
  int64_t max_meta_iterations = 0;
  double divergence_threshold = 1e12;
  // Replace the inner SCAFFOLD-S solve by `prox` (verification only).
  bool exact_inner = false;
  // Needed by kProxDistance and exact_inner; when set, every meta record
  // also reports its distance to the exact prox point.
  ProxOracle prox;
};

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kScaffoldS;
  SyncConfig sync;
  // For minibatch-md gamma_g is the server step; for minibatch-mp gamma_g is
  // eta, with 0 meaning 1 / (2 beta). FedAvg-S requires gamma_g == gamma_l.
  StepsizeSchedule steps = StepsizeSchedule::Constant(0.01, 0.01);
  double sigma = 0.0;
  // When set, the output is the weighted average with this decay
  // (c3 gamma mu) instead of the last iterate.
  std::optional<double> averaging_decay;
  CatalystConfig catalyst;
};

// Runs `config` on `problem` from `z0` until `budget` communication rounds
// have been used (minibatch-mp stops at the largest even count <= budget).
// `seed` drives the sync coins and the gradient noise through independent
// derived streams. Rows are labelled and measured per `metrics`.
Trace RunAlgorithm(const AlgorithmConfig& config,
                   const FederatedProblem& problem, const SaddlePoint& z0,
                   int64_t budget, uint64_t seed,
                   const MetricsContext& metrics);

// Meta loop around SCAFFOLD-S on theta-regularized subproblems. With
// theta == 0 it is a single SCAFFOLD-S run over the whole budget on the
// original problem. Throws InvalidInputError for theta < 0 and
// DivergenceError when an inner iterate moves further than the configured
// threshold from the reference point.
Trace RunScaffoldCatalyst(const AlgorithmConfig& config,
                          const FederatedProblem& problem,
                          const SaddlePoint& z0, int64_t budget, uint64_t seed,
                          const MetricsContext& metrics);

// Seeds of the two random streams of a run.
uint64_t CoinSeed(uint64_t seed);
uint64_t NoiseSeed(uint64_t seed);

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_RUN_H_
