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

#ifndef FEDSADDLE_ALGORITHMS_SYNC_SCHEDULE_H_
#define FEDSADDLE_ALGORITHMS_SYNC_SCHEDULE_H_

#include <cstdint>

#include "fedsaddle/core/random.h"

namespace fedsaddle {

// When clients synchronize. Probabilistic mode flips one coin per iteration
// with success probability p; deterministic mode synchronizes after exactly
// tau local steps.
class SyncSchedule {
 public:
  static SyncSchedule Probabilistic(double p, uint64_t seed);
  static SyncSchedule Deterministic(int tau);

  // Coin for the current iteration. Call exactly once per iteration.
  bool Next();
  // Restarts the deterministic step count (a fresh run starts synchronized).
  // The probabilistic coin stream is left untouched.
  void Restart() { steps_since_sync_ = 0; }

  bool probabilistic() const { return probabilistic_; }
  double p() const { return p_; }
  int tau() const { return tau_; }
  // Mean number of iterations between synchronizations.
  double expected_period() const;

 private:
  SyncSchedule(bool probabilistic, double p, int tau, uint64_t seed);

  bool probabilistic_;
  double p_;
  int tau_;
  int steps_since_sync_ = 0;
  Rng rng_;
};

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_SYNC_SCHEDULE_H_
