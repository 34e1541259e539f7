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

#ifndef FEDSADDLE_METRICS_METRICS_H_
#define FEDSADDLE_METRICS_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fedsaddle/core/problem.h"
#include "fedsaddle/core/saddle_point.h"

namespace fedsaddle {

// One per-iteration record. Optional fields are absent when the quantity is
// undefined for the run (no analytic optimum, not a SCAFFOLD-type method,
// not a catalyst run).
struct TraceRow {
  std::string algorithm;
  double s = 0.0;
  uint64_t seed = 0;
  double gamma = 0.0;  // base stepsize of the run
  int64_t k = 0;
  int64_t comm_rounds = 0;
  std::optional<double> dist_sq;   // ||z^k - z*||^2
  std::optional<double> gap;       // Gap*(z^k)
  std::optional<double> drift;     // V_k
  std::optional<double> cv_error;  // sigma_k
  std::optional<int64_t> meta_t;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

// V = (1/n) sum_i ||mean_point - client_points[i]||^2.
double ClientDrift(std::span<const SaddlePoint> client_points,
                   const SaddlePoint& mean_point);

// sigma = (1/n) sum_i ||G_i(z_tilde) - G_i(z_star)||^2.
double ControlVariateError(const FederatedProblem& problem,
                           const SaddlePoint& z_tilde,
                           const SaddlePoint& z_star);

}  // namespace fedsaddle

#endif  // FEDSADDLE_METRICS_METRICS_H_
