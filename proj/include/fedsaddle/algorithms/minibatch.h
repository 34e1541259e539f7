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

#ifndef FEDSADDLE_ALGORITHMS_MINIBATCH_H_
#define FEDSADDLE_ALGORITHMS_MINIBATCH_H_

#include "fedsaddle/core/noisy_oracle.h"
#include "fedsaddle/core/problem.h"

namespace fedsaddle {

// Average of tau * n noisy mappings, all evaluated at `z`: each client
// averages its tau queries, then the server averages over clients. Queries
// are drawn client-major. With sigma == 0 the result equals
// problem.GradientMapping(z) bitwise.
SaddlePoint MinibatchMapping(const SaddlePoint& z, NoisyOracle& oracle,
                             int tau);

// Minibatch mirror descent (Euclidean): z - gamma_g * MinibatchMapping(z).
// One communication round.
SaddlePoint MinibatchMdRound(const SaddlePoint& server_point,
                             NoisyOracle& oracle, int tau, double gamma_g);

struct MirrorProxStep {
  SaddlePoint half_point;  // z^{r+1/2}
  SaddlePoint next;        // z^{r+1}
};

// Minibatch mirror-prox (Euclidean extragradient):
//   z^{r+1/2} = z^r - eta * avg(z^r),  z^{r+1} = z^r - eta * avg(z^{r+1/2}).
// Each batch is one communication round, two per call.
MirrorProxStep MinibatchMpRound(const SaddlePoint& server_point,
                                NoisyOracle& oracle, int tau, double eta);

// 1 / (2 beta).
double MirrorProxDefaultStepsize(const ProblemConstants& constants);

}  // namespace fedsaddle

#endif  // FEDSADDLE_ALGORITHMS_MINIBATCH_H_
