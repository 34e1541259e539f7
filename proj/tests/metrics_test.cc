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

#include <cmath>
#include <vector>

#include "fedsaddle/algorithms/run.h"
#include "fedsaddle/algorithms/trace.h"
#include "fedsaddle/metrics/metrics.h"
#include "fedsaddle/testbed/testbed.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fedsaddle {
namespace {

using testbed::GenerateInstance;
using testbed::OptimalPoint;
using testing::RandomPoint;

TEST(ClientDriftTest, TwoClientExample) {
  const std::vector<SaddlePoint> points = {SaddlePoint::Constant(1, 0, 0.0),
                                           SaddlePoint::Constant(1, 0, 2.0)};
  EXPECT_DOUBLE_EQ(ClientDrift(points, Mean(points)), 1.0);
}

TEST(ClientDriftTest, TranslationInvariant) {
  Rng rng(1);
  std::vector<SaddlePoint> points;
  for (int i = 0; i < 6; ++i) points.push_back(RandomPoint(rng, 3, 3));
  const SaddlePoint shift = RandomPoint(rng, 3, 3, 10.0);
  std::vector<SaddlePoint> shifted;
  for (const SaddlePoint& p : points) shifted.push_back(p + shift);
  EXPECT_NEAR(ClientDrift(points, Mean(points)),
              ClientDrift(shifted, Mean(shifted)), 1e-12);
  EXPECT_EQ(ClientDrift(std::vector<SaddlePoint>(4, shift), shift), 0.0);
}

TEST(ControlVariateErrorTest, ZeroAtOptimumAndLipschitzBound) {
  const auto instance = GenerateInstance(6.0, 5, 4, 0.05, 2);
  const SaddlePoint z_star = OptimalPoint(instance);
  EXPECT_EQ(ControlVariateError(instance, z_star, z_star), 0.0);
  const double beta = instance.constants().beta;
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const SaddlePoint z = RandomPoint(rng, 5, 5);
    EXPECT_LE(ControlVariateError(instance, z, z_star),
              4.0 * beta * beta * SquaredDistance(z, z_star) * (1.0 + 1e-12));
  }
}

TEST(ControlVariateErrorTest, HomogeneousClientsGiveGlobalMappingNorm) {
  const auto instance = GenerateInstance(0.0, 4, 3, 0.2, 4);
  const SaddlePoint z_star = OptimalPoint(instance);
  Rng rng(5);
  const SaddlePoint z = RandomPoint(rng, 4, 4);
  EXPECT_NEAR(ControlVariateError(instance, z, z_star),
              instance.GradientMapping(z).SquaredNorm(), 1e-12);
}

TEST(TraceRecorderTest, Cadence) {
  const auto instance = GenerateInstance(1.0, 3, 2, 0.1, 6);
  MetricsContext context;
  context.record_every = 3;
  context.z_star = OptimalPoint(instance);
  const TraceRecorder recorder(instance, context);
  Trace trace;
  const SaddlePoint z = SaddlePoint::Constant(3, 3, 1.0);
  for (int64_t k = 0; k <= 10; ++k) {
    recorder.Record(trace, k, k / 2, z, 0.0, nullptr, std::nullopt,
                    k == 10);
  }
  recorder.Record(trace, 10, 5, z, 0.0, nullptr, std::nullopt, true);
  std::vector<int64_t> ks;
  for (const TraceRow& row : trace.rows) ks.push_back(row.k);
  EXPECT_EQ(ks, (std::vector<int64_t>{0, 3, 6, 9, 10}));

  context.record_every = 0;
  const TraceRecorder sparse(instance, context);
  Trace sparse_trace;
  for (int64_t k = 0; k <= 10; ++k) {
    sparse.Record(sparse_trace, k, k, z, std::nullopt, nullptr, std::nullopt,
                  k == 10);
  }
  ASSERT_EQ(sparse_trace.rows.size(), 2u);
  EXPECT_EQ(sparse_trace.rows.back().k, 10);
}

TEST(TraceRecorderTest, FieldsAbsentWithoutOptimum) {
  const auto instance = GenerateInstance(1.0, 3, 2, 0.1, 6);
  MetricsContext context;
  const TraceRecorder recorder(instance, context);
  Trace trace;
  const SaddlePoint z = SaddlePoint::Constant(3, 3, 1.0);
  recorder.Record(trace, 0, 0, z, std::nullopt, &z, std::nullopt);
  ASSERT_EQ(trace.rows.size(), 1u);
  EXPECT_FALSE(trace.rows[0].dist_sq.has_value());
  EXPECT_FALSE(trace.rows[0].gap.has_value());
  EXPECT_FALSE(trace.rows[0].cv_error.has_value());
  EXPECT_FALSE(trace.rows[0].drift.has_value());
}

TEST(TraceInvariantTest, GapBoundAndMonotoneRounds) {
  for (Algorithm algorithm :
       {Algorithm::kMinibatchMd, Algorithm::kMinibatchMp, Algorithm::kFedAvgS,
        Algorithm::kScaffoldS, Algorithm::kScaffoldCatalystS}) {
    const auto instance = GenerateInstance(5.0, 6, 5, 1e-3, 7);
    AlgorithmConfig config;
    config.algorithm = algorithm;
    config.sync.probabilistic = true;
    config.sync.p = 0.1;
    config.sigma = 0.1;
    config.steps = StepsizeSchedule::Constant(0.01, 0.01);
    MetricsContext context;
    context.z_star = OptimalPoint(instance);
    const Trace trace = RunAlgorithm(config, instance,
                                     SaddlePoint::Constant(6, 6, 1.0), 30, 8,
                                     context);
    const double mu = instance.constants().mu;
    int64_t rounds = 0;
    int64_t k = -1;
    ASSERT_FALSE(trace.rows.empty());
    for (const TraceRow& row : trace.rows) {
      ASSERT_TRUE(row.dist_sq && row.gap);
      EXPECT_GE(*row.gap, 0.5 * mu * *row.dist_sq - 1e-9);
      EXPECT_GE(row.comm_rounds, rounds);
      EXPECT_GT(row.k, k);
      rounds = row.comm_rounds;
      k = row.k;
      if (row.drift) {
        EXPECT_GE(*row.drift, 0.0);
      }
    }
    EXPECT_EQ(trace.rows.back().comm_rounds, trace.comm_rounds);
    EXPECT_EQ(trace.rows.front().k, 0);
  }
}

}  // namespace
}  // namespace fedsaddle
