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

#include "fedsaddle/core/noisy_oracle.h"

#include <cmath>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

NoisyOracle::NoisyOracle(const FederatedProblem& problem, double sigma,
                         uint64_t seed)
    : problem_(&problem), sigma_(sigma), coordinate_stddev_(0.0), rng_(seed) {
  if (!(sigma >= 0.0)) throw InvalidInputError("sigma must be non-negative");
  const auto dim =
      static_cast<double>(problem.primal_dim() + problem.dual_dim());
  if (dim > 0) coordinate_stddev_ = sigma / std::sqrt(dim);
}

SaddlePoint NoisyOracle::Query(int client, const SaddlePoint& z) {
  SaddlePoint g = problem_->ClientGradientMapping(client, z);
  if (sigma_ == 0.0) return g;
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    g.joint()[j] += coordinate_stddev_ * rng_.StandardNormal();
  }
  return g;
}

void NoisyOracle::Rebind(const FederatedProblem& problem) {
  if (problem.primal_dim() != problem_->primal_dim() ||
      problem.dual_dim() != problem_->dual_dim() ||
      problem.num_clients() != problem_->num_clients()) {
    throw InvalidInputError("rebinding oracle to a problem of another shape");
  }
  problem_ = &problem;
}

}  // namespace fedsaddle
