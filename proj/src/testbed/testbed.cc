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

#include "fedsaddle/testbed/testbed.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/random.h"

namespace fedsaddle::testbed {

TestbedInstance::TestbedInstance(std::vector<Eigen::VectorXd> a,
                                 std::vector<Eigen::VectorXd> b, double lambda,
                                 double s, uint64_t seed, bool centered)
    : a_(std::move(a)),
      b_(std::move(b)),
      lambda_(lambda),
      s_(s),
      seed_(seed),
      centered_(centered) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw InvalidInputError("need matching, non-empty a and b client lists");
  }
  if (!(lambda > 0.0)) throw InvalidInputError("lambda must be positive");
  if (!(s >= 0.0)) throw InvalidInputError("s must be non-negative");
  dim_ = a_.front().size();
  if (dim_ < 1) throw InvalidInputError("dimension must be positive");
  const int n = static_cast<int>(a_.size());

  mean_a_ = Eigen::VectorXd::Zero(dim_);
  mean_b_ = Eigen::VectorXd::Zero(dim_);
  double max_half_a = 0.0;
  for (int i = 0; i < n; ++i) {
    if (a_[i].size() != dim_ || b_[i].size() != dim_) {
      throw InvalidInputError("client " + std::to_string(i) +
                              " has inconsistent dimension");
    }
    if (!a_[i].allFinite() || !b_[i].allFinite()) {
      throw InvalidInputError("non-finite instance data");
    }
    mean_a_ += a_[i];
    mean_b_ += b_[i];
    max_half_a = std::max(max_half_a, 0.5 * a_[i].cwiseAbs().maxCoeff());
  }
  mean_a_ /= n;
  mean_b_ /= n;
  if (centered_) mean_b_.setZero();

  constants_.mu = std::min(lambda_, 1.0);
  constants_.beta = std::max({max_half_a, 1.0, lambda_});
  constants_.n_clients = n;
  constants_.sigma = 0.0;
}

void TestbedInstance::set_sigma(double sigma) {
  if (!(sigma >= 0.0)) throw InvalidInputError("sigma must be non-negative");
  constants_.sigma = sigma;
}

double TestbedInstance::DoClientValue(int client, const SaddlePoint& z) const {
  const auto x = z.x();
  const auto y = z.y();
  const double bracket = y.squaredNorm() - b_[client].dot(y) +
                         y.dot(a_[client].cwiseProduct(x));
  return -0.5 * bracket + 0.5 * lambda_ * x.squaredNorm();
}

SaddlePoint TestbedInstance::DoClientGradientMapping(
    int client, const SaddlePoint& z) const {
  const auto x = z.x();
  const auto y = z.y();
  const Eigen::VectorXd& a = a_[client];
  SaddlePoint g(dim_, dim_);
  g.x() = lambda_ * x - 0.5 * a.cwiseProduct(y);
  g.y() = y - 0.5 * b_[client] + 0.5 * a.cwiseProduct(x);
  return g;
}

TestbedInstance GenerateInstance(double s, int d, int n, double lambda,
                                 uint64_t seed) {
  if (d < 1) throw InvalidInputError("d must be positive");
  if (n < 1) throw InvalidInputError("n must be positive");
  if (!(lambda > 0.0)) throw InvalidInputError("lambda must be positive");
  if (!(s >= 0.0)) throw InvalidInputError("s must be non-negative");

  Rng rng(seed);
  std::vector<Eigen::VectorXd> b(n, Eigen::VectorXd(d));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) b[i][j] = s * rng.StandardNormal();
  }
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  for (const auto& bi : b) mean += bi;
  mean /= n;
  for (auto& bi : b) bi -= mean;

  std::vector<Eigen::VectorXd> a(n, Eigen::VectorXd(d));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      a[i][j] = std::max(1.0, 1.0 + s * rng.StandardNormal());
    }
  }
  return TestbedInstance(std::move(a), std::move(b), lambda, s, seed,
                         /*centered=*/true);
}

SaddlePoint OptimalPoint(const TestbedInstance& instance) {
  const Eigen::Index d = instance.dim();
  SaddlePoint z(d, d);
  if (instance.centered()) return z;
  const double lambda = instance.lambda();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double half_a = 0.5 * instance.mean_a()[j];
    const double half_b = 0.5 * instance.mean_b()[j];
    const double det = lambda + half_a * half_a;
    if (!(det > 0.0) || !std::isfinite(det)) {
      throw NumericError("singular stationarity system at coordinate " +
                         std::to_string(j));
    }
    z.x()[j] = half_a * half_b / det;
    z.y()[j] = lambda * half_b / det;
  }
  return z;
}

SaddlePoint ClosedFormProx(const TestbedInstance& instance,
                           const ProxQuery& query) {
  if (!(query.theta > 0.0)) throw InvalidInputError("theta must be positive");
  instance.CheckPoint(query.anchor);
  const Eigen::Index d = instance.dim();
  const double theta = query.theta;
  const double lambda = instance.lambda();
  SaddlePoint z(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const double half_a = 0.5 * instance.mean_a()[j];
    const double p = lambda + theta;
    const double q = 1.0 + theta;
    const double r1 = theta * query.anchor.x()[j];
    const double r2 = 0.5 * instance.mean_b()[j] + theta * query.anchor.y()[j];
    const double det = p * q + half_a * half_a;
    z.x()[j] = (q * r1 + half_a * r2) / det;
    z.y()[j] = (p * r2 - half_a * r1) / det;
  }
  return z;
}

double ProxResidual(const TestbedInstance& instance, const ProxQuery& query,
                    const SaddlePoint& z) {
  instance.CheckPoint(z);
  instance.CheckPoint(query.anchor);
  const double theta = query.theta;
  const Eigen::VectorXd half_a = 0.5 * instance.mean_a();
  const Eigen::VectorXd r1 = (instance.lambda() + theta) * z.x() -
                             half_a.cwiseProduct(z.y()) -
                             theta * query.anchor.x();
  const Eigen::VectorXd r2 = half_a.cwiseProduct(z.x()) +
                             (1.0 + theta) * z.y() -
                             0.5 * instance.mean_b() - theta * query.anchor.y();
  return std::max(r1.cwiseAbs().maxCoeff(), r2.cwiseAbs().maxCoeff());
}

double HeterogeneityEstimate(const TestbedInstance& instance, double radius,
                             int samples, uint64_t seed) {
  if (!(radius > 0.0)) throw InvalidInputError("radius must be positive");
  if (samples < 1) throw InvalidInputError("need at least one sample");
  const int n = instance.num_clients();
  const Eigen::Index d = instance.dim();
  if (n < 2) return 0.0;

  Rng rng(seed);
  double best = 0.0;
  std::vector<SaddlePoint> mappings(n);
  for (int k = 0; k < samples; ++k) {
    Eigen::VectorXd direction(2 * d);
    for (Eigen::Index j = 0; j < direction.size(); ++j) {
      direction[j] = rng.StandardNormal();
    }
    direction.normalize();
    // Uniform in the ball: radial fraction U^(1/dim).
    const double rho =
        std::pow(rng.Uniform(), 1.0 / static_cast<double>(direction.size()));
    for (const double sign : {1.0, -1.0}) {
      const SaddlePoint z(sign * radius * rho * direction, d);
      for (int i = 0; i < n; ++i) {
        mappings[i] = instance.ClientGradientMapping(i, z);
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          best = std::max(best, Distance(mappings[i], mappings[j]));
        }
      }
    }
  }
  return best;
}

}  // namespace fedsaddle::testbed
