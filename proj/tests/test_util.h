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

#ifndef FEDSADDLE_TESTS_TEST_UTIL_H_
#define FEDSADDLE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>

#include "fedsaddle/core/random.h"
#include "fedsaddle/core/saddle_point.h"

namespace fedsaddle::testing {

inline SaddlePoint RandomPoint(Rng& rng, Eigen::Index m, Eigen::Index d,
                               double scale = 1.0) {
  SaddlePoint z(m, d);
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    z.joint()[j] = scale * rng.StandardNormal();
  }
  return z;
}

inline double MaxAbsDiff(const SaddlePoint& a, const SaddlePoint& b) {
  return (a.joint() - b.joint()).lpNorm<Eigen::Infinity>();
}

inline bool BitwiseEqual(const SaddlePoint& a, const SaddlePoint& b) {
  return a.SameShape(b) &&
         std::equal(a.joint().data(), a.joint().data() + a.size(),
                    b.joint().data());
}

}  // namespace fedsaddle::testing

#endif  // FEDSADDLE_TESTS_TEST_UTIL_H_
