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

#ifndef FEDSADDLE_ALGORITHMS_TRACE_H_
#define FEDSADDLE_ALGORITHMS_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/problem.h"
#include "fedsaddle/metrics/metrics.h"

namespace fedsaddle {

// Labels and reference point for the rows of one run.
struct MetricsContext {
  std::string algorithm;
  double s = 0.0;
  uint64_t seed = 0;
  double gamma = 0.0;
  // Analytic optimum. Without it dist_sq, gap and cv_error stay absent.
  std::optional<SaddlePoint> z_star;
  // Record every j-th iteration; the first and last rows are always kept.
  // 0 keeps only those two.
  int64_t record_every = 1;
};

// Per meta-iteration summary of a catalyst run.
struct CatalystMetaRecord {
  int64_t t = 0;
  int64_t inner_rounds = 0;
  int64_t inner_iterations = 0;
  SaddlePoint anchor;  // z_bar^t
  SaddlePoint next;    // z_bar^{t+1}
  // ||z_bar^{t+1} - prox(z_bar^t)||, when a prox oracle is attached.
  std::optional<double> prox_distance;
  std::string stopped_by;
};

struct Trace {
  std::vector<TraceRow> rows;
  SaddlePoint output;  // last iterate, or the weighted average if configured
  SaddlePoint last_iterate;
  int64_t comm_rounds = 0;
  int64_t iterations = 0;
  std::vector<CatalystMetaRecord> meta;
};

// Raised when iterates blow up; carries everything recorded so far.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, Trace trace)
      : NumericError(what), trace_(std::move(trace)) {}
  const Trace& trace() const { return trace_; }

 private:
  Trace trace_;
};

// Builds TraceRows from snapshots on the configured cadence.
class TraceRecorder {
 public:
  TraceRecorder(const FederatedProblem& problem, MetricsContext context);

  // `cv_point` is the last synchronized server point for SCAFFOLD-type
  // methods; nullptr leaves cv_error absent. With `force` the row is kept
  // regardless of cadence (but never duplicated for the same k).
  void Record(Trace& trace, int64_t k, int64_t comm_rounds,
              const SaddlePoint& point, std::optional<double> drift,
              const SaddlePoint* cv_point, std::optional<int64_t> meta_t,
              bool force = false) const;

  // True when iteration k falls on the recording cadence.
  bool OnCadence(int64_t k) const {
    return context_.record_every > 0 && k % context_.record_every == 0;
  }
  const MetricsContext& context() const { return context_; }

 private:
  const FederatedProblem& problem_;
  MetricsContext context_;
};

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_TRACE_H_
