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

#ifndef FEDSADDLE_CORE_NOISY_ORACLE_H_
#define FEDSADDLE_CORE_NOISY_ORACLE_H_

#include <cstdint>

#include "fedsaddle/core/problem.h"
#include "fedsaddle/core/random.h"

namespace fedsaddle {

// Unbiased stochastic gradient-mapping queries: G_i(z) plus isotropic
// Gaussian noise with per-coordinate standard deviation sigma / sqrt(m + d),
// i.e. total variance sigma^2 per query. With sigma == 0 no random numbers
// are drawn and queries equal the exact mapping bitwise.
//
// Owns its random stream; not safe for concurrent queries.
class NoisyOracle {
 public:
  NoisyOracle(const FederatedProblem& problem, double sigma, uint64_t seed);

  SaddlePoint Query(int client, const SaddlePoint& z);

  // Points the oracle at another problem of the same shape while keeping the
  // random stream position (catalyst subproblems share one stream).
  void Rebind(const FederatedProblem& problem);

  const FederatedProblem& problem() const { return *problem_; }
  double sigma() const { return sigma_; }

 private:
  const FederatedProblem* problem_;
  double sigma_;
  double coordinate_stddev_;
  Rng rng_;
};

}  // namespace fedsaddle

#endif  // FEDSADDLE_CORE_NOISY_ORACLE_H_
