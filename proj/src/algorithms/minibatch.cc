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

#include "fedsaddle/algorithms/minibatch.h"

#include <vector>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {

SaddlePoint MinibatchMapping(const SaddlePoint& z, NoisyOracle& oracle,
                             int tau) {
  if (tau < 1) throw InvalidInputError("tau must be a positive integer");
  const int n = oracle.problem().num_clients();
  std::vector<SaddlePoint> per_client;
  per_client.reserve(n);
  std::vector<SaddlePoint> queries(tau);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < tau; ++t) queries[t] = oracle.Query(i, z);
    per_client.push_back(Mean(queries));
  }
  return Mean(per_client);
}

SaddlePoint MinibatchMdRound(const SaddlePoint& server_point,
                             NoisyOracle& oracle, int tau, double gamma_g) {
  SaddlePoint next = server_point;
  next.AddScaled(-gamma_g, MinibatchMapping(server_point, oracle, tau));
  return next;
}

MirrorProxStep MinibatchMpRound(const SaddlePoint& server_point,
                                NoisyOracle& oracle, int tau, double eta) {
  MirrorProxStep step;
  step.half_point = server_point;
  step.half_point.AddScaled(-eta, MinibatchMapping(server_point, oracle, tau));
  step.next = server_point;
  step.next.AddScaled(-eta, MinibatchMapping(step.half_point, oracle, tau));
  return step;
}

double MirrorProxDefaultStepsize(const ProblemConstants& constants) {
  return 1.0 / (2.0 * constants.beta);
}

}  // namespace fedsaddle
