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

#include "fedsaddle/algorithms/framework.h"

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

RunState RunState::Initial(const SaddlePoint& z0, int n_clients) {
  if (n_clients < 1) throw InvalidInputError("need at least one client");
  RunState state;
  state.client_points.assign(n_clients, z0);
  state.server_point = z0;
  SaddlePoint zero = z0;
  zero.joint().setZero();
  state.accumulated.assign(n_clients, zero);
  return state;
}

SaddlePoint RunState::VirtualIterate() const { return Mean(client_points); }

SaddlePoint FedAvgDirection::Compute(const RunState& state, int client) {
  return oracle_.Query(client, state.client_points[client]);
}

SaddlePoint ScaffoldDirection::Compute(const RunState& state, int client) {
  if (!state.control_variate) {
    throw StateError("SCAFFOLD-S direction requested without control variate");
  }
  SaddlePoint g = oracle_.Query(client, state.client_points[client]);
  g -= oracle_.Query(client, state.server_point);
  g += *state.control_variate;
  return g;
}

void ScaffoldDirection::OnSynchronize(RunState& state) {
  state.control_variate = oracle_.problem().GradientMapping(state.server_point);
}

StepInfo FrameworkStep(RunState& state, LocalDirection& direction,
                       SyncSchedule& schedule, const StepsizeSchedule& steps) {
  const int n = static_cast<int>(state.client_points.size());
  if (n == 0 || static_cast<int>(state.accumulated.size()) != n) {
    throw StateError("run state has inconsistent client lists");
  }
  const bool sync = schedule.Next();
  const double decay = steps.DecayFactor(state.iteration);
  const double local_step = steps.gamma_l() * decay;

  // Directions depend only on the client's own point and the server state,
  // so updating client i before computing client i+1 is safe.
  for (int i = 0; i < n; ++i) {
    const SaddlePoint g = direction.Compute(state, i);
    state.accumulated[i].AddScaled(decay, g);
    state.client_points[i].AddScaled(-local_step, g);
  }

  StepInfo info;
  if (sync) {
    info.synchronized = true;
    info.pre_reset_client_mean = Mean(state.client_points);
    state.server_point.AddScaled(-steps.gamma_g(), Mean(state.accumulated));
    for (int i = 0; i < n; ++i) {
      state.client_points[i] = state.server_point;
      state.accumulated[i].joint().setZero();
    }
    ++state.comm_rounds;
    direction.OnSynchronize(state);
  }
  ++state.iteration;
  return info;
}

}  // namespace fedsaddle
