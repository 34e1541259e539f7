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

#ifndef FEDSADDLE_ALGORITHMS_FRAMEWORK_H_
#define FEDSADDLE_ALGORITHMS_FRAMEWORK_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fedsaddle/algorithms/stepsize.h"
#include "fedsaddle/algorithms/sync_schedule.h"
#include "fedsaddle/core/noisy_oracle.h"
#include "fedsaddle/core/problem.h"

namespace fedsaddle {

// State of the local-update framework: every client moves along its own
// direction with the local stepsize, and on a synchronization the server
// applies the client-averaged sum of directions since the last
// synchronization with the global stepsize, then resets every client to the
// new server point.
struct RunState {
  std::vector<SaddlePoint> client_points;  // z_i^k
  SaddlePoint server_point;                // z~^k, last synchronized iterate
  // Per-client sum of directions since the last synchronization, each scaled
  // by the schedule's decay factor (1 for constant stepsizes).
  std::vector<SaddlePoint> accumulated;
  int64_t iteration = 0;
  int64_t comm_rounds = 0;
  std::optional<SaddlePoint> control_variate;  // G(z~^k), SCAFFOLD-S only

  // All clients and the server at z0, nothing accumulated.
  static RunState Initial(const SaddlePoint& z0, int n_clients);

  // Mean of the client points; equals server_point right after a
  // synchronization.
  SaddlePoint VirtualIterate() const;
};

// Produces g_i^k for one client. Directions may read the state but not
// modify it; OnSynchronize is the hook for the per-algorithm extra exchange
// after a server update.
class LocalDirection {
 public:
  virtual ~LocalDirection() = default;
  virtual std::string_view name() const = 0;
  virtual SaddlePoint Compute(const RunState& state, int client) = 0;
  // Called after every server update and once when a run starts.
  virtual void OnSynchronize(RunState& state) { (void)state; }
  virtual bool uses_control_variate() const { return false; }
};

// FedAvg-S: g_i^k = G^_i(z_i^k).
class FedAvgDirection final : public LocalDirection {
 public:
  explicit FedAvgDirection(NoisyOracle& oracle) : oracle_(oracle) {}
  std::string_view name() const override { return "fedavg-s"; }
  SaddlePoint Compute(const RunState& state, int client) override;

 private:
  NoisyOracle& oracle_;
};

// SCAFFOLD-S: g_i^k = G^_i(z_i^k) - G^_i(z~^k) + G(z~^k). The two noisy
// queries draw independent noise. The control variate G(z~) is the exact
// global mapping, refreshed on every synchronization.
class ScaffoldDirection final : public LocalDirection {
 public:
  explicit ScaffoldDirection(NoisyOracle& oracle) : oracle_(oracle) {}
  std::string_view name() const override { return "scaffold-s"; }
  SaddlePoint Compute(const RunState& state, int client) override;
  void OnSynchronize(RunState& state) override;
  bool uses_control_variate() const override { return true; }

 private:
  NoisyOracle& oracle_;
};

struct StepInfo {
  bool synchronized = false;
  // Mean of the client points after the local step, before the reset.
  // Present only on synchronizations.
  std::optional<SaddlePoint> pre_reset_client_mean;
};

// One iteration k -> k+1 of the framework. Clients are processed in
// ascending index order so noisy queries consume the stream
// deterministically.
StepInfo FrameworkStep(RunState& state, LocalDirection& direction,
                       SyncSchedule& schedule, const StepsizeSchedule& steps);

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_FRAMEWORK_H_
