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

#ifndef FEDSADDLE_CORE_RANDOM_H_
#define FEDSADDLE_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace fedsaddle {

// SplitMix64 finalizer. Used to derive independent stream seeds from one
// master seed.
uint64_t MixSeed(uint64_t seed, uint64_t salt);

// FNV-1a over the bytes of `text`, then mixed into `seed`.
uint64_t MixSeed(uint64_t seed, std::string_view text);

// Portable random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; uniform and normal variates are derived
// here rather than through <random> distributions, whose algorithms are
// implementation-defined. Normals use the Marsaglia polar method with the
// second variate cached.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double StandardNormal();
  double Normal(double mean, double stddev) {
    return mean + stddev * StandardNormal();
  }

 private:
  std::mt19937_64 engine_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace fedsaddle

#endif  // FEDSADDLE_CORE_RANDOM_H_
