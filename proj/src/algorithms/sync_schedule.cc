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

#include "fedsaddle/algorithms/sync_schedule.h"

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

SyncSchedule::SyncSchedule(bool probabilistic, double p, int tau,
                           uint64_t seed)
    : probabilistic_(probabilistic), p_(p), tau_(tau), rng_(seed) {}

SyncSchedule SyncSchedule::Probabilistic(double p, uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw InvalidInputError("synchronization probability must be in (0, 1]");
  }
  return SyncSchedule(true, p, 0, seed);
}

SyncSchedule SyncSchedule::Deterministic(int tau) {
  if (tau < 1) throw InvalidInputError("tau must be a positive integer");
  return SyncSchedule(false, 1.0 / tau, tau, 0);
}

bool SyncSchedule::Next() {
  if (probabilistic_) return rng_.Uniform() < p_;
  if (++steps_since_sync_ < tau_) return false;
  steps_since_sync_ = 0;
  return true;
}

double SyncSchedule::expected_period() const {
  return probabilistic_ ? 1.0 / p_ : static_cast<double>(tau_);
}

}  // namespace fedsaddle
