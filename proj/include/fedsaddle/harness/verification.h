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

#ifndef FEDSADDLE_HARNESS_VERIFICATION_H_
#define FEDSADDLE_HARNESS_VERIFICATION_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fedsaddle {

struct CheckResult {
  std::string id;  // "A1" ... "A11"
  std::string name;
  bool passed = false;
  std::string measured;  // key=value pairs of the measured quantities
  double seconds = 0.0;
};

// Acceptance checks. Each one is self-contained and deterministic.
CheckResult CheckGradientOracle();         // A1
CheckResult CheckAnalyticOptimum();        // A2
CheckResult CheckProxOracle();             // A3
CheckResult CheckGdaReduction();           // A4
CheckResult CheckCatalystInvariances();    // A5
CheckResult CheckProximalPointMeta();      // A6
CheckResult CheckScaffoldInnerAccuracy();  // A7
CheckResult CheckQualitativeSweep();       // A8
CheckResult CheckExtragradient();          // A9
CheckResult CheckCommunication();          // A10
CheckResult CheckTheoremStepsize();        // A11

struct NamedCheck {
  std::string id;
  std::function<CheckResult()> run;
};

// "oracles" (A1 A2 A3 A11), "identities" (A4 A5 A9 A10),
// "convergence" (A6 A7 A8) or "all". ConfigError otherwise.
std::vector<NamedCheck> SuiteChecks(std::string_view suite);

// Runs the checks in order, timing each one.
std::vector<CheckResult> RunSuite(std::string_view suite);

// "A1 PASS gradient-oracle max_rel_err=... (0.12s)".
std::string FormatCheck(const CheckResult& result);

}  // namespace fedsaddle

#endif  // FEDSADDLE_HARNESS_VERIFICATION_H_
