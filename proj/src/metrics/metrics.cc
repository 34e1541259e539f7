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

#include "fedsaddle/metrics/metrics.h"

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

double ClientDrift(std::span<const SaddlePoint> client_points,
                   const SaddlePoint& mean_point) {
  if (client_points.empty()) throw InvalidInputError("no client points");
  double total = 0.0;
  for (const SaddlePoint& z : client_points) {
    total += SquaredDistance(mean_point, z);
  }
  return total / static_cast<double>(client_points.size());
}

double ControlVariateError(const FederatedProblem& problem,
                           const SaddlePoint& z_tilde,
                           const SaddlePoint& z_star) {
  double total = 0.0;
  for (int i = 0; i < problem.num_clients(); ++i) {
    total += SquaredDistance(problem.ClientGradientMapping(i, z_tilde),
                             problem.ClientGradientMapping(i, z_star));
  }
  return total / problem.num_clients();
}

}  // namespace fedsaddle
