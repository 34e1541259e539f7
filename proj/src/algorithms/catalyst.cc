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

#include <cmath>
#include <string>
#include <utility>

#include "fedsaddle/algorithms/framework.h"
#include "fedsaddle/algorithms/run.h"
#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/noisy_oracle.h"

namespace fedsaddle {
namespace {

using InnerStop = CatalystConfig::InnerStop;

bool MetaBudgetLeft(const CatalystConfig& config, int64_t t) {
  return config.max_meta_iterations == 0 || t < config.max_meta_iterations;
}

double ReferenceDistance(const MetricsContext& metrics,
                         const SaddlePoint& z) {
  return metrics.z_star ? Distance(z, *metrics.z_star) : z.Norm();
}

void ThrowIfDiverged(const CatalystConfig& config,
                     const MetricsContext& metrics, const SaddlePoint& z,
                     Trace& trace) {
  const double distance = ReferenceDistance(metrics, z);
  if (std::isfinite(distance) && distance <= config.divergence_threshold) {
    return;
  }
  throw DivergenceError(
      "catalyst inner iterate diverged (distance " + std::to_string(distance) +
          ")",
      std::move(trace));
}

Trace RunExactInner(const AlgorithmConfig& config,
                    const FederatedProblem& problem, const SaddlePoint& z0,
                    int64_t budget, const MetricsContext& metrics) {
  const CatalystConfig& catalyst = config.catalyst;
  if (!catalyst.prox) {
    throw ConfigError("exact inner solves need a prox oracle");
  }
  TraceRecorder recorder(problem, metrics);
  Trace trace;
  SaddlePoint anchor = z0;
  recorder.Record(trace, 0, 0, anchor, 0.0, &anchor, 0);
  for (int64_t t = 0; trace.comm_rounds < budget && MetaBudgetLeft(catalyst, t);
       ++t) {
    SaddlePoint next = catalyst.prox(anchor, catalyst.theta);
    problem.CheckPoint(next);
    ++trace.comm_rounds;
    ++trace.iterations;
    recorder.Record(trace, t + 1, trace.comm_rounds, next, 0.0, &next, t,
                    trace.comm_rounds == budget);
    trace.meta.push_back({t, 1, 1, anchor, next, 0.0, "exact"});
    anchor = std::move(next);
  }
  trace.last_iterate = anchor;
  trace.output = std::move(anchor);
  return trace;
}

}  // namespace

Trace RunScaffoldCatalyst(const AlgorithmConfig& config,
                          const FederatedProblem& problem,
                          const SaddlePoint& z0, int64_t budget, uint64_t seed,
                          const MetricsContext& metrics) {
  const CatalystConfig& catalyst = config.catalyst;
  if (!(catalyst.theta >= 0.0) || !std::isfinite(catalyst.theta)) {
    throw InvalidInputError("catalyst theta must be finite and non-negative");
  }
  if (budget < 0) throw InvalidInputError("round budget must be non-negative");
  problem.CheckPoint(z0);

  if (catalyst.theta == 0.0) {
    AlgorithmConfig plain = config;
    plain.algorithm = Algorithm::kScaffoldS;
    Trace trace = RunAlgorithm(plain, problem, z0, budget, seed, metrics);
    for (TraceRow& row : trace.rows) row.meta_t = 0;
    trace.meta.push_back({0, trace.comm_rounds, trace.iterations, z0,
                          trace.last_iterate, std::nullopt, "budget"});
    return trace;
  }
  if (catalyst.exact_inner) {
    return RunExactInner(config, problem, z0, budget, metrics);
  }
  if (catalyst.stop == InnerStop::kProxDistance && !catalyst.prox) {
    throw ConfigError("the prox-distance stopping rule needs a prox oracle");
  }
  if (catalyst.stop == InnerStop::kFixedRounds && catalyst.fixed_rounds < 1) {
    throw ConfigError("fixed inner rounds must be positive");
  }

  const double mu = problem.constants().mu;
  const double theta = catalyst.theta;
  const double prox_target_sq =
      std::pow(mu / (2.0 * (theta + mu)), 2) * catalyst.epsilon;

  NoisyOracle oracle(problem, config.sigma, NoiseSeed(seed));
  SyncSchedule schedule = config.sync.Make(CoinSeed(seed));
  TraceRecorder recorder(problem, metrics);
  std::optional<AverageAccumulator> average;
  if (config.averaging_decay) average.emplace(*config.averaging_decay);

  Trace trace;
  SaddlePoint anchor = z0;
  recorder.Record(trace, 0, 0, anchor, 0.0, &anchor, 0);
  if (average) average->Add(anchor);

  int64_t k = 0;
  for (int64_t t = 0; trace.comm_rounds < budget && MetaBudgetLeft(catalyst, t);
       ++t) {
    const RegularizedProblem subproblem(problem, theta, anchor);
    oracle.Rebind(subproblem);
    ScaffoldDirection direction(oracle);
    RunState state = RunState::Initial(anchor, problem.num_clients());
    direction.OnSynchronize(state);
    schedule.Restart();
    const double start_norm = state.control_variate->Norm();
    std::optional<SaddlePoint> prox_point;
    if (catalyst.prox) prox_point = catalyst.prox(anchor, theta);

    std::string stopped_by;
    int64_t inner_rounds = 0;
    while (stopped_by.empty()) {
      const StepInfo info =
          FrameworkStep(state, direction, schedule, config.steps);
      ++k;
      if (recorder.OnCadence(k) || average) {
        const SaddlePoint mean = state.VirtualIterate();
        if (average) average->Add(mean);
        if (recorder.OnCadence(k)) {
          recorder.Record(trace, k, trace.comm_rounds + state.comm_rounds,
                          mean, ClientDrift(state.client_points, mean),
                          &state.server_point, t);
        }
      }
      if (!info.synchronized) continue;
      ++inner_rounds;
      trace.iterations = k;
      ThrowIfDiverged(catalyst, metrics, state.server_point, trace);
      if (trace.comm_rounds + inner_rounds >= budget) {
        stopped_by = "budget";
        break;
      }
      switch (catalyst.stop) {
        case InnerStop::kFixedRounds:
          if (inner_rounds >= catalyst.fixed_rounds) stopped_by = "fixed";
          break;
        case InnerStop::kProxDistance:
          if (SquaredDistance(state.server_point, *prox_point) <=
              prox_target_sq) {
            stopped_by = "prox-distance";
          }
          break;
        case InnerStop::kObjectiveDecrease:
          if (state.control_variate->Norm() <=
              catalyst.decrease_factor * start_norm) {
            stopped_by = "decrease";
          }
          break;
      }
      if (stopped_by.empty() && catalyst.stop != InnerStop::kFixedRounds &&
          inner_rounds >= catalyst.max_inner_rounds) {
        stopped_by = "cap";
      }
    }
    trace.comm_rounds += inner_rounds;

    CatalystMetaRecord record;
    record.t = t;
    record.inner_rounds = inner_rounds;
    record.inner_iterations = state.iteration;
    record.anchor = anchor;
    record.next = state.server_point;
    if (prox_point) {
      record.prox_distance = Distance(state.server_point, *prox_point);
    }
    record.stopped_by = stopped_by;
    trace.meta.push_back(std::move(record));
    anchor = state.server_point;
  }
  oracle.Rebind(problem);

  recorder.Record(trace, k, trace.comm_rounds, anchor, 0.0, &anchor,
                  trace.meta.empty() ? 0 : trace.meta.back().t, true);
  trace.iterations = k;
  trace.last_iterate = anchor;
  trace.output = average && average->count() > 0 ? average->Output() : anchor;
  return trace;
}

}  // namespace fedsaddle
