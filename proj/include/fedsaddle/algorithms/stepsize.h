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

#ifndef FEDSADDLE_ALGORITHMS_STEPSIZE_H_
#define FEDSADDLE_ALGORITHMS_STEPSIZE_H_

#include <cstdint>

#include "fedsaddle/core/problem.h"
#include "fedsaddle/core/saddle_point.h"

namespace fedsaddle {

// Constants of the linear-rate stepsize rule
//   gamma = min{ gamma_max, log(max{2, min{a mu^2 K^2 / c1, a mu^3 K^3 / c2}})
//                           / (c3 mu K) }.
// A zero c1 or c2 removes that term from the inner min (it reads as +inf).
struct TheoremStepsizeParams {
  double a = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.25;
  double gamma_max = 1.0;
  double mu = 1.0;
  int64_t iterations = 1;  // K
};

// Throws InvalidInputError for mu <= 0, K < 1, gamma_max <= 0, negative c1
// or c2, or c3 outside (0, 1]. When both c1 and c2 vanish the log argument
// is infinite and the result saturates at gamma_max.
double TheoremStepsize(const TheoremStepsizeParams& params);

// FedAvg-S preset: a = ||z0 - z*||^2 / 2, c3 = 1/4, c1 = sigma^2 / (2n),
// c2 = (2 beta^2 / mu)(36 zeta^2 / p^2 + 2 sigma^2 / p),
// gamma_max = mu / (4 beta^2).
TheoremStepsizeParams FedAvgTheoremParams(const ProblemConstants& constants,
                                          double p, double zeta,
                                          double initial_distance_sq,
                                          int64_t iterations);

// SCAFFOLD-S scaled-stepsize preset: c3 = 1/8, c1 = sigma^2 / (2n),
// c2 = 8 beta^2 sigma^2 / (p mu), gamma_max = p mu / (80 beta^2), and
// a = ||z0 - z*||^2 / 2 + (2 beta^2 / mu) H gamma_max^3 sigma0_sq.
TheoremStepsizeParams ScaffoldScaledParams(const ProblemConstants& constants,
                                           double p, double initial_distance_sq,
                                           double sigma0_sq,
                                           int64_t iterations);

// H = 64 (1 - p)(2 + p)(8 + p) / (12 p^3).
double ScaffoldDriftConstant(double p);

// Zero-local-stepsize SCAFFOLD-S: gamma_l = 0, gamma_g = p mu / (4 beta^2).
double ScaffoldZeroLocalGlobalStepsize(const ProblemConstants& constants,
                                       double p);

class StepsizeSchedule {
 public:
  enum class Mode { kConstant, kDecaying, kTheorem };

  static StepsizeSchedule Constant(double gamma_l, double gamma_g);
  // gamma_l / (sqrt(k) + 1) and gamma_g / (sqrt(k) + 1) at iteration k.
  static StepsizeSchedule Decaying(double gamma_l, double gamma_g);
  // gamma_l = gamma_g = TheoremStepsize(params).
  static StepsizeSchedule Theorem(const TheoremStepsizeParams& params);

  Mode mode() const { return mode_; }
  double gamma_l() const { return gamma_l_; }
  double gamma_g() const { return gamma_g_; }
  // 1 / (sqrt(k) + 1) in decaying mode, 1 otherwise.
  double DecayFactor(int64_t iteration) const;
  double Local(int64_t iteration) const {
    return gamma_l_ * DecayFactor(iteration);
  }
  double Global(int64_t iteration) const {
    return gamma_g_ * DecayFactor(iteration);
  }

 private:
  StepsizeSchedule(Mode mode, double gamma_l, double gamma_g);

  Mode mode_;
  double gamma_l_;
  double gamma_g_;
};

// Weighted iterate average (1/W_K) sum_k w_k z^k with w_k = (1 - decay)^(1-k),
// where decay = c3 gamma mu. The running sums are kept divided by the newest
// weight, so each Add is S <- (1 - decay) S + z, W <- (1 - decay) W + 1 and
// nothing overflows for large K.
class AverageAccumulator {
 public:
  // Requires 0 <= decay < 1. decay == 0 gives the plain average.
  explicit AverageAccumulator(double decay);

  void Add(const SaddlePoint& z);
  // Throws InvalidInputError when nothing has been added.
  SaddlePoint Output() const;

  int64_t count() const { return count_; }
  double decay() const { return decay_; }

 private:
  double decay_;
  SaddlePoint scaled_sum_;
  double scaled_weight_ = 0.0;
  int64_t count_ = 0;
};

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_STEPSIZE_H_
