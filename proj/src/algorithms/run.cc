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

#include "fedsaddle/algorithms/run.h"

#include <array>
#include <cmath>
#include <memory>
#include <utility>

#include "fedsaddle/algorithms/framework.h"
#include "fedsaddle/algorithms/minibatch.h"
#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/noisy_oracle.h"
#include "fedsaddle/core/random.h"

namespace fedsaddle {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kNames = {{
    {Algorithm::kMinibatchMd, "minibatch-md"},
    {Algorithm::kMinibatchMp, "minibatch-mp"},
    {Algorithm::kFedAvgS, "fedavg-s"},
    {Algorithm::kScaffoldS, "scaffold-s"},
    {Algorithm::kScaffoldCatalystS, "scaffold-catalyst-s"},
}};

void CheckBudget(int64_t budget) {
  if (budget < 0) throw InvalidInputError("round budget must be non-negative");
}

void Finish(Trace& trace, SaddlePoint last,
            const std::optional<AverageAccumulator>& average) {
  trace.last_iterate = std::move(last);
  trace.output =
      average && average->count() > 0 ? average->Output() : trace.last_iterate;
}

Trace RunMinibatch(const AlgorithmConfig& config,
                   const FederatedProblem& problem, const SaddlePoint& z0,
                   int64_t budget, uint64_t seed,
                   const MetricsContext& metrics) {
  const bool mirror_prox = config.algorithm == Algorithm::kMinibatchMp;
  const int tau = config.sync.BatchSteps();
  double step = config.steps.gamma_g();
  if (mirror_prox && step == 0.0) {
    step = MirrorProxDefaultStepsize(problem.constants());
  }
  NoisyOracle oracle(problem, config.sigma, NoiseSeed(seed));
  TraceRecorder recorder(problem, metrics);
  std::optional<AverageAccumulator> average;
  if (config.averaging_decay) average.emplace(*config.averaging_decay);

  Trace trace;
  SaddlePoint z = z0;
  recorder.Record(trace, 0, 0, z, 0.0, nullptr, std::nullopt);
  if (average) average->Add(z);

  const int64_t updates = mirror_prox ? budget / 2 : budget;
  const int64_t rounds_per_update = mirror_prox ? 2 : 1;
  for (int64_t r = 1; r <= updates; ++r) {
    if (mirror_prox) {
      z = MinibatchMpRound(z, oracle, tau, step).next;
    } else {
      z = MinibatchMdRound(z, oracle, tau, step);
    }
    if (average) average->Add(z);
    trace.comm_rounds = r * rounds_per_update;
    trace.iterations = r;
    if (recorder.OnCadence(r) || r == updates) {
      recorder.Record(trace, r, trace.comm_rounds, z, 0.0, nullptr,
                      std::nullopt, r == updates);
    }
  }
  Finish(trace, std::move(z), average);
  return trace;
}

Trace RunFramework(const AlgorithmConfig& config,
                   const FederatedProblem& problem, const SaddlePoint& z0,
                   int64_t budget, uint64_t seed,
                   const MetricsContext& metrics) {
  const bool scaffold = config.algorithm == Algorithm::kScaffoldS;
  if (!scaffold && config.steps.gamma_g() != config.steps.gamma_l()) {
    throw ConfigError("fedavg-s requires gamma_g == gamma_l");
  }
  NoisyOracle oracle(problem, config.sigma, NoiseSeed(seed));
  SyncSchedule schedule = config.sync.Make(CoinSeed(seed));
  std::unique_ptr<LocalDirection> direction;
  if (scaffold) {
    direction = std::make_unique<ScaffoldDirection>(oracle);
  } else {
    direction = std::make_unique<FedAvgDirection>(oracle);
  }
  TraceRecorder recorder(problem, metrics);
  std::optional<AverageAccumulator> average;
  if (config.averaging_decay) average.emplace(*config.averaging_decay);

  RunState state = RunState::Initial(z0, problem.num_clients());
  direction->OnSynchronize(state);

  Trace trace;
  auto record = [&](bool force) {
    if (!force && !recorder.OnCadence(state.iteration)) return;
    const SaddlePoint mean = state.VirtualIterate();
    recorder.Record(trace, state.iteration, state.comm_rounds, mean,
                    ClientDrift(state.client_points, mean),
                    scaffold ? &state.server_point : nullptr, std::nullopt,
                    force);
  };
  record(true);
  if (average) average->Add(state.VirtualIterate());

  while (state.comm_rounds < budget) {
    FrameworkStep(state, *direction, schedule, config.steps);
    if (average) average->Add(state.VirtualIterate());
    record(false);
  }
  record(true);
  trace.comm_rounds = state.comm_rounds;
  trace.iterations = state.iteration;
  Finish(trace, state.VirtualIterate(), average);
  return trace;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [value, name] : kNames) {
    if (value == algorithm) return name;
  }
  throw InvalidInputError("unknown algorithm value");
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [value, known] : kNames) {
    if (known == name) return value;
  }
  throw ConfigError("unknown algorithm: " + std::string(name));
}

SyncSchedule SyncConfig::Make(uint64_t seed) const {
  if (probabilistic) return SyncSchedule::Probabilistic(p, seed);
  return SyncSchedule::Deterministic(tau);
}

int SyncConfig::BatchSteps() const {
  if (!probabilistic) {
    if (tau < 1) throw ConfigError("tau must be a positive integer");
    return tau;
  }
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("p must lie in (0, 1]");
  return std::max(1, static_cast<int>(std::lround(1.0 / p)));
}

uint64_t CoinSeed(uint64_t seed) { return MixSeed(seed, "coin"); }
uint64_t NoiseSeed(uint64_t seed) { return MixSeed(seed, "noise"); }

Trace RunAlgorithm(const AlgorithmConfig& config,
                   const FederatedProblem& problem, const SaddlePoint& z0,
                   int64_t budget, uint64_t seed,
                   const MetricsContext& metrics) {
  CheckBudget(budget);
  problem.CheckPoint(z0);
  switch (config.algorithm) {
    case Algorithm::kMinibatchMd:
    case Algorithm::kMinibatchMp:
      return RunMinibatch(config, problem, z0, budget, seed, metrics);
    case Algorithm::kFedAvgS:
    case Algorithm::kScaffoldS:
      return RunFramework(config, problem, z0, budget, seed, metrics);
    case Algorithm::kScaffoldCatalystS:
      return RunScaffoldCatalyst(config, problem, z0, budget, seed, metrics);
  }
  throw InvalidInputError("unknown algorithm value");
}

}  // namespace fedsaddle
