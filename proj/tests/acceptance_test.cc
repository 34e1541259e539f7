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

// One test per acceptance criterion. Each prints its pass/fail line.

#include <chrono>
#include <functional>
#include <iostream>

#include "fedsaddle/harness/verification.h"
#include "gtest/gtest.h"

namespace fedsaddle {
namespace {

void Expect(const std::function<CheckResult()>& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result = check();
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  std::cout << FormatCheck(result) << std::endl;
  EXPECT_TRUE(result.passed) << result.id << " " << result.name;
}

TEST(Acceptance, A1GradientOracle) { Expect(CheckGradientOracle); }
TEST(Acceptance, A2AnalyticOptimum) { Expect(CheckAnalyticOptimum); }
TEST(Acceptance, A3ProxOracle) { Expect(CheckProxOracle); }
TEST(Acceptance, A4GdaReduction) { Expect(CheckGdaReduction); }
TEST(Acceptance, A5CatalystInvariances) { Expect(CheckCatalystInvariances); }
TEST(Acceptance, A6ProximalPointMeta) { Expect(CheckProximalPointMeta); }
TEST(Acceptance, A7ScaffoldInnerAccuracy) {
  Expect(CheckScaffoldInnerAccuracy);
}
TEST(Acceptance, A8QualitativeSweep) { Expect(CheckQualitativeSweep); }
TEST(Acceptance, A9Extragradient) { Expect(CheckExtragradient); }
TEST(Acceptance, A10Communication) { Expect(CheckCommunication); }
TEST(Acceptance, A11TheoremStepsize) { Expect(CheckTheoremStepsize); }

}  // namespace
}  // namespace fedsaddle
