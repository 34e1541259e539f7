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

#include "fedsaddle/core/problem.h"

#include <string>
#include <utility>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

void ProblemConstants::Validate() const {
  if (!(mu > 0.0)) throw InvalidInputError("mu must be positive");
  if (!(beta >= mu)) throw InvalidInputError("beta must be at least mu");
  if (n_clients < 1) throw InvalidInputError("need at least one client");
  if (!(sigma >= 0.0)) throw InvalidInputError("sigma must be non-negative");
}

void FederatedProblem::CheckPoint(const SaddlePoint& z) const {
  if (z.primal_dim() != primal_dim() || z.dual_dim() != dual_dim()) {
    throw InvalidInputError("point has shape (" +
                            std::to_string(z.primal_dim()) + ", " +
                            std::to_string(z.dual_dim()) +
                            "), problem expects (" +
                            std::to_string(primal_dim()) + ", " +
                            std::to_string(dual_dim()) + ")");
  }
}

void FederatedProblem::CheckClient(int client) const {
  if (client < 0 || client >= num_clients()) {
    throw InvalidInputError("client index " + std::to_string(client) +
                            " out of range [0, " +
                            std::to_string(num_clients()) + ")");
  }
}

double FederatedProblem::ClientValue(int client, const SaddlePoint& z) const {
  CheckClient(client);
  CheckPoint(z);
  return DoClientValue(client, z);
}

SaddlePoint FederatedProblem::ClientGradientMapping(
    int client, const SaddlePoint& z) const {
  CheckClient(client);
  CheckPoint(z);
  return DoClientGradientMapping(client, z);
}

double FederatedProblem::Value(const SaddlePoint& z) const {
  CheckPoint(z);
  double total = 0.0;
  for (int i = 0; i < num_clients(); ++i) total += DoClientValue(i, z);
  return total / num_clients();
}

SaddlePoint FederatedProblem::GradientMapping(const SaddlePoint& z) const {
  CheckPoint(z);
  // Same offset form as Mean(): identical clients give G_0 back bitwise.
  SaddlePoint first = DoClientGradientMapping(0, z);
  Eigen::VectorXd offset = Eigen::VectorXd::Zero(first.size());
  for (int i = 1; i < num_clients(); ++i) {
    offset += DoClientGradientMapping(i, z).joint() - first.joint();
  }
  first.joint() += offset / static_cast<double>(num_clients());
  return first;
}

RegularizedProblem::RegularizedProblem(const FederatedProblem& base,
                                       double theta, SaddlePoint anchor)
    : base_(base), theta_(theta), anchor_(std::move(anchor)) {
  if (!(theta >= 0.0)) throw InvalidInputError("theta must be non-negative");
  base_.CheckPoint(anchor_);
  constants_ = base_.constants();
  constants_.mu += theta;
  constants_.beta += theta;
}

double RegularizedProblem::DoClientValue(int client,
                                         const SaddlePoint& z) const {
  const double dx = (z.x() - anchor_.x()).squaredNorm();
  const double dy = (z.y() - anchor_.y()).squaredNorm();
  return base_.ClientValue(client, z) + 0.5 * theta_ * (dx - dy);
}

SaddlePoint RegularizedProblem::DoClientGradientMapping(
    int client, const SaddlePoint& z) const {
  SaddlePoint g = base_.ClientGradientMapping(client, z);
  // The y block of the mapping carries -grad_y, so both blocks get +theta.
  g.joint() += theta_ * (z.joint() - anchor_.joint());
  return g;
}

CallbackProblem::CallbackProblem(ProblemConstants constants,
                                 Eigen::Index primal_dim,
                                 Eigen::Index dual_dim,
                                 std::vector<ValueFn> values,
                                 std::vector<MappingFn> mappings)
    : constants_(constants),
      primal_dim_(primal_dim),
      dual_dim_(dual_dim),
      values_(std::move(values)),
      mappings_(std::move(mappings)) {
  constants_.Validate();
  if (static_cast<int>(values_.size()) != constants_.n_clients ||
      static_cast<int>(mappings_.size()) != constants_.n_clients) {
    throw InvalidInputError("one value and one mapping callable per client");
  }
}

double DualityGap(const FederatedProblem& problem, const SaddlePoint& z,
                  const SaddlePoint& z_star) {
  problem.CheckPoint(z);
  problem.CheckPoint(z_star);
  const SaddlePoint x_with_dual_star(Eigen::VectorXd(z.x()),
                                     Eigen::VectorXd(z_star.y()));
  const SaddlePoint primal_star_with_y(Eigen::VectorXd(z_star.x()),
                                       Eigen::VectorXd(z.y()));
  return problem.Value(x_with_dual_star) - problem.Value(primal_star_with_y);
}

}  // namespace fedsaddle
