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

#ifndef FEDSADDLE_CORE_PROBLEM_H_
#define FEDSADDLE_CORE_PROBLEM_H_

#include <functional>
#include <optional>
#include <vector>

#include "fedsaddle/core/saddle_point.h"

namespace fedsaddle {

struct ProblemConstants {
  double mu = 1.0;    // strong convex-concavity modulus, > 0
  double beta = 1.0;  // smoothness, >= mu
  int n_clients = 1;
  double sigma = 0.0;  // gradient-query noise standard deviation
  std::optional<double> d_bound;  // bound on ||z*||, diagnostic only

  double kappa() const { return beta / mu; }
  // Throws InvalidInputError unless mu > 0, beta >= mu, n >= 1, sigma >= 0.
  void Validate() const;
};

// Federated objective f = (1/n) sum_i f_i over z = (x, y), minimized in x and
// maximized in y. Client indices are zero-based. The gradient mapping of
// client i is G_i(z) = (grad_x f_i(z), -grad_y f_i(z)).
//
// Implementations override the Do* hooks; the public entry points validate
// the client index and point shape first. Implementations must be immutable
// after construction.
class FederatedProblem {
 public:
  virtual ~FederatedProblem() = default;

  virtual const ProblemConstants& constants() const = 0;
  virtual Eigen::Index primal_dim() const = 0;
  virtual Eigen::Index dual_dim() const = 0;
  int num_clients() const { return constants().n_clients; }

  double ClientValue(int client, const SaddlePoint& z) const;
  SaddlePoint ClientGradientMapping(int client, const SaddlePoint& z) const;

  // Mean over clients in ascending index order.
  double Value(const SaddlePoint& z) const;
  SaddlePoint GradientMapping(const SaddlePoint& z) const;

  SaddlePoint ZeroPoint() const { return {primal_dim(), dual_dim()}; }
  void CheckPoint(const SaddlePoint& z) const;
  void CheckClient(int client) const;

 protected:
  virtual double DoClientValue(int client, const SaddlePoint& z) const = 0;
  virtual SaddlePoint DoClientGradientMapping(int client,
                                              const SaddlePoint& z) const = 0;
};

// Client losses regularized around an anchor z_bar:
//   f_i^theta(z) = f_i(z) + theta/2 ||x - x_bar||^2 - theta/2 ||y - y_bar||^2
// so G_i^theta(z) = G_i(z) + theta (z - z_bar). Constants become
// (mu + theta, beta + theta). Holds a reference to `base`.
class RegularizedProblem final : public FederatedProblem {
 public:
  RegularizedProblem(const FederatedProblem& base, double theta,
                     SaddlePoint anchor);

  const ProblemConstants& constants() const override { return constants_; }
  Eigen::Index primal_dim() const override { return base_.primal_dim(); }
  Eigen::Index dual_dim() const override { return base_.dual_dim(); }
  double theta() const { return theta_; }
  const SaddlePoint& anchor() const { return anchor_; }
  const FederatedProblem& base() const { return base_; }

 protected:
  double DoClientValue(int client, const SaddlePoint& z) const override;
  SaddlePoint DoClientGradientMapping(int client,
                                      const SaddlePoint& z) const override;

 private:
  const FederatedProblem& base_;
  double theta_;
  SaddlePoint anchor_;
  ProblemConstants constants_;
};

// Problem assembled from per-client callables. Mostly for small hand-built
// problems outside the testbed (e.g. a pure bilinear game).
class CallbackProblem final : public FederatedProblem {
 public:
  using ValueFn = std::function<double(const SaddlePoint&)>;
  using MappingFn = std::function<SaddlePoint(const SaddlePoint&)>;

  CallbackProblem(ProblemConstants constants, Eigen::Index primal_dim,
                  Eigen::Index dual_dim, std::vector<ValueFn> values,
                  std::vector<MappingFn> mappings);

  const ProblemConstants& constants() const override { return constants_; }
  Eigen::Index primal_dim() const override { return primal_dim_; }
  Eigen::Index dual_dim() const override { return dual_dim_; }

 protected:
  double DoClientValue(int client, const SaddlePoint& z) const override {
    return values_[client](z);
  }
  SaddlePoint DoClientGradientMapping(int client,
                                      const SaddlePoint& z) const override {
    return mappings_[client](z);
  }

 private:
  ProblemConstants constants_;
  Eigen::Index primal_dim_;
  Eigen::Index dual_dim_;
  std::vector<ValueFn> values_;
  std::vector<MappingFn> mappings_;
};

// Gap*(z) = f(x, y*) - f(x*, y). Non-negative when z_star is the saddle point.
double DualityGap(const FederatedProblem& problem, const SaddlePoint& z,
                  const SaddlePoint& z_star);

}  // namespace fedsaddle

#endif  // FEDSADDLE_CORE_PROBLEM_H_
