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

#include "fedsaddle/algorithms/stepsize.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double RatioOrInf(double numerator, double denominator) {
  return denominator == 0.0 ? kInf : numerator / denominator;
}

}  // namespace

double TheoremStepsize(const TheoremStepsizeParams& params) {
  if (!(params.mu > 0.0)) throw InvalidInputError("mu must be positive");
  if (params.iterations < 1) throw InvalidInputError("K must be at least 1");
  if (!(params.gamma_max > 0.0)) {
    throw InvalidInputError("gamma_max must be positive");
  }
  if (params.c1 < 0.0 || params.c2 < 0.0) {
    throw InvalidInputError("c1 and c2 must be non-negative");
  }
  if (!(params.c3 > 0.0 && params.c3 <= 1.0)) {
    throw InvalidInputError("c3 must lie in (0, 1]");
  }
  const double mu = params.mu;
  const double k = static_cast<double>(params.iterations);
  const double first = RatioOrInf(params.a * mu * mu * k * k, params.c1);
  const double second = RatioOrInf(params.a * mu * mu * mu * k * k * k,
                                   params.c2);
  const double argument = std::max(2.0, std::min(first, second));
  if (std::isinf(argument)) return params.gamma_max;
  return std::min(params.gamma_max,
                  std::log(argument) / (params.c3 * mu * k));
}

TheoremStepsizeParams FedAvgTheoremParams(const ProblemConstants& constants,
                                          double p, double zeta,
                                          double initial_distance_sq,
                                          int64_t iterations) {
  constexpr double kDriftConstant = 9.0;
  const double mu = constants.mu;
  const double beta_sq = constants.beta * constants.beta;
  const double sigma_sq = constants.sigma * constants.sigma;
  TheoremStepsizeParams params;
  params.a = initial_distance_sq / 2.0;
  params.c3 = 0.25;
  params.c1 = sigma_sq / (2.0 * constants.n_clients);
  params.c2 = (2.0 * beta_sq / mu) *
              (4.0 * kDriftConstant * zeta * zeta / (p * p) +
               2.0 * sigma_sq / p);
  params.gamma_max = mu / (4.0 * beta_sq);
  params.mu = mu;
  params.iterations = iterations;
  return params;
}

double ScaffoldDriftConstant(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidInputError("p must be in (0, 1]");
  return 64.0 * (1.0 - p) * (2.0 + p) * (8.0 + p) / (12.0 * p * p * p);
}

TheoremStepsizeParams ScaffoldScaledParams(const ProblemConstants& constants,
                                           double p, double initial_distance_sq,
                                           double sigma0_sq,
                                           int64_t iterations) {
  const double mu = constants.mu;
  const double beta_sq = constants.beta * constants.beta;
  const double sigma_sq = constants.sigma * constants.sigma;
  TheoremStepsizeParams params;
  params.gamma_max = p * mu / (80.0 * beta_sq);
  params.c3 = 0.125;
  params.c1 = sigma_sq / (2.0 * constants.n_clients);
  params.c2 = 8.0 * beta_sq * sigma_sq / (p * mu);
  // a depends on the chosen gamma through gamma^3; gamma_max bounds it.
  params.a = initial_distance_sq / 2.0 +
             (2.0 * beta_sq / mu) * ScaffoldDriftConstant(p) *
                 std::pow(params.gamma_max, 3) * sigma0_sq;
  params.mu = mu;
  params.iterations = iterations;
  return params;
}

double ScaffoldZeroLocalGlobalStepsize(const ProblemConstants& constants,
                                       double p) {
  return p * constants.mu / (4.0 * constants.beta * constants.beta);
}

StepsizeSchedule::StepsizeSchedule(Mode mode, double gamma_l, double gamma_g)
    : mode_(mode), gamma_l_(gamma_l), gamma_g_(gamma_g) {
  if (!(gamma_l >= 0.0) || !(gamma_g >= 0.0)) {
    throw InvalidInputError("stepsizes must be non-negative");
  }
}

StepsizeSchedule StepsizeSchedule::Constant(double gamma_l, double gamma_g) {
  return StepsizeSchedule(Mode::kConstant, gamma_l, gamma_g);
}

StepsizeSchedule StepsizeSchedule::Decaying(double gamma_l, double gamma_g) {
  return StepsizeSchedule(Mode::kDecaying, gamma_l, gamma_g);
}

StepsizeSchedule StepsizeSchedule::Theorem(
    const TheoremStepsizeParams& params) {
  const double gamma = TheoremStepsize(params);
  return StepsizeSchedule(Mode::kTheorem, gamma, gamma);
}

double StepsizeSchedule::DecayFactor(int64_t iteration) const {
  if (mode_ != Mode::kDecaying) return 1.0;
  return 1.0 / (std::sqrt(static_cast<double>(iteration)) + 1.0);
}

AverageAccumulator::AverageAccumulator(double decay) : decay_(decay) {
  if (!(decay >= 0.0 && decay < 1.0)) {
    throw InvalidInputError("averaging decay must lie in [0, 1)");
  }
}

void AverageAccumulator::Add(const SaddlePoint& z) {
  if (count_ == 0) {
    scaled_sum_ = z;
    scaled_weight_ = 1.0;
  } else {
    const double keep = 1.0 - decay_;
    scaled_sum_ *= keep;
    scaled_sum_ += z;
    scaled_weight_ = keep * scaled_weight_ + 1.0;
  }
  ++count_;
}

SaddlePoint AverageAccumulator::Output() const {
  if (count_ == 0) throw InvalidInputError("no iterates accumulated");
  SaddlePoint out = scaled_sum_;
  out *= 1.0 / scaled_weight_;
  return out;
}

}  // namespace fedsaddle
