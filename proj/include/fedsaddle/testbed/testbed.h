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

#ifndef FEDSADDLE_TESTBED_TESTBED_H_
#define FEDSADDLE_TESTBED_TESTBED_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fedsaddle/core/problem.h"

namespace fedsaddle::testbed {

// Saddle-point form of regularized federated linear regression with diagonal
// client matrices A_i = diag(a_i):
//
//   f_i(x, y) = -1/2 [ ||y||^2 - b_i^T y + y^T A_i x ] + lambda/2 ||x||^2
//
// with x, y in R^d. The gradient mapping is
//
//   G_i(x, y) = ( lambda x - 1/2 A_i y,  y - 1/2 b_i + 1/2 A_i x ).
//
// Constants: mu = min(lambda, 1); beta = max over i of
// max(max_j |a_ij| / 2, 1, lambda).
class TestbedInstance final : public FederatedProblem {
 public:
  // `centered` declares that the b_i sum to zero by construction; the
  // analytic oracles then use an exactly-zero mean of b instead of the
  // rounded client average.
  TestbedInstance(std::vector<Eigen::VectorXd> a, std::vector<Eigen::VectorXd> b,
                  double lambda, double s = 0.0, uint64_t seed = 0,
                  bool centered = false);

  const ProblemConstants& constants() const override { return constants_; }
  Eigen::Index primal_dim() const override { return dim_; }
  Eigen::Index dual_dim() const override { return dim_; }

  Eigen::Index dim() const { return dim_; }
  double lambda() const { return lambda_; }
  double s() const { return s_; }
  uint64_t seed() const { return seed_; }
  bool centered() const { return centered_; }
  const std::vector<Eigen::VectorXd>& a() const { return a_; }
  const std::vector<Eigen::VectorXd>& b() const { return b_; }
  const Eigen::VectorXd& mean_a() const { return mean_a_; }
  const Eigen::VectorXd& mean_b() const { return mean_b_; }

  // Sets the noise level reported through constants().sigma.
  void set_sigma(double sigma);

 protected:
  double DoClientValue(int client, const SaddlePoint& z) const override;
  SaddlePoint DoClientGradientMapping(int client,
                                      const SaddlePoint& z) const override;

 private:
  std::vector<Eigen::VectorXd> a_;
  std::vector<Eigen::VectorXd> b_;
  double lambda_;
  double s_;
  uint64_t seed_;
  bool centered_;
  Eigen::Index dim_;
  Eigen::VectorXd mean_a_;
  Eigen::VectorXd mean_b_;
  ProblemConstants constants_;
};

// Draws an instance: b'_i ~ N(0, s^2 I_d), b_i = b'_i - mean(b');
// a_i ~ N(1, s^2 I_d) clipped below at 1. All b' draws come first, client
// major, then all a draws, client major, from Rng(seed).
TestbedInstance GenerateInstance(double s, int d, int n, double lambda,
                                 uint64_t seed);

// Unique saddle point of the global objective. Each coordinate j solves
//   lambda x_j - a_j/2 y_j = 0,   a_j/2 x_j + y_j = b_j/2
// with a, b the client means. Generated instances return exactly zero.
SaddlePoint OptimalPoint(const TestbedInstance& instance);

struct ProxQuery {
  double theta = 1.0;
  SaddlePoint anchor;
};

// argmin_x argmax_y f(x, y) + theta/2 ||x - x_bar||^2 - theta/2 ||y - y_bar||^2,
// from the per-coordinate 2x2 stationarity system
//   (lambda + theta) x - a/2 y = theta x_bar
//   a/2 x + (1 + theta) y     = b/2 + theta y_bar.
SaddlePoint ClosedFormProx(const TestbedInstance& instance,
                           const ProxQuery& query);

// Max-norm residual of the prox stationarity system at `z`.
double ProxResidual(const TestbedInstance& instance, const ProxQuery& query,
                    const SaddlePoint& z);

// Lower estimate of the heterogeneity constant restricted to the ball of the
// given radius around the origin: max over sampled z and client pairs of
// ||G_i(z) - G_j(z)||. The global supremum is infinite when the A_i differ,
// since G_i - G_j is affine in z.
//
// Samples come in antipodal pairs +-radius * rho_k * u_k with direction u_k
// and radial fraction rho_k fixed by `seed`, so the estimate is
// non-decreasing in `radius` for a fixed seed.
double HeterogeneityEstimate(const TestbedInstance& instance, double radius,
                             int samples, uint64_t seed);

// JSON file with fields format, version, seed, s, d, n, lambda, centered,
// a (n x d diagonal entries) and b (n x d). Doubles are written with
// round-trip precision, so a loaded instance equals the saved one bitwise.
void SaveInstance(const TestbedInstance& instance, const std::string& path);
TestbedInstance LoadInstance(const std::string& path);
std::string InstanceToJson(const TestbedInstance& instance);
TestbedInstance InstanceFromJson(const std::string& text);

}  // namespace fedsaddle::testbed

#endif  // FEDSADDLE_TESTBED_TESTBED_H_
