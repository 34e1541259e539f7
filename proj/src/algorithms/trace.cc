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

#include "fedsaddle/algorithms/trace.h"

#include <utility>

namespace fedsaddle {

TraceRecorder::TraceRecorder(const FederatedProblem& problem,
                             MetricsContext context)
    : problem_(problem), context_(std::move(context)) {
  if (context_.z_star) problem_.CheckPoint(*context_.z_star);
}

void TraceRecorder::Record(Trace& trace, int64_t k, int64_t comm_rounds,
                           const SaddlePoint& point,
                           std::optional<double> drift,
                           const SaddlePoint* cv_point,
                           std::optional<int64_t> meta_t, bool force) const {
  if (!trace.rows.empty() && trace.rows.back().k == k) return;
  const bool on_cadence =
      trace.rows.empty() ||
      (context_.record_every > 0 && k % context_.record_every == 0);
  if (!on_cadence && !force) return;

  TraceRow row;
  row.algorithm = context_.algorithm;
  row.s = context_.s;
  row.seed = context_.seed;
  row.gamma = context_.gamma;
  row.k = k;
  row.comm_rounds = comm_rounds;
  row.drift = drift;
  row.meta_t = meta_t;
  if (context_.z_star) {
    const SaddlePoint& z_star = *context_.z_star;
    row.dist_sq = SquaredDistance(point, z_star);
    row.gap = DualityGap(problem_, point, z_star);
    if (cv_point != nullptr) {
      row.cv_error = ControlVariateError(problem_, *cv_point, z_star);
    }
  }
  trace.rows.push_back(std::move(row));
}

}  // namespace fedsaddle
