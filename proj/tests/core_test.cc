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

#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/noisy_oracle.h"
#include "fedsaddle/core/problem.h"
#include "fedsaddle/core/random.h"
#include "fedsaddle/core/saddle_point.h"
#include "fedsaddle/testbed/testbed.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fedsaddle {
namespace {

using testbed::GenerateInstance;
using testbed::TestbedInstance;
using testing::MaxAbsDiff;
using testing::RandomPoint;

Eigen::VectorXd Vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(values.size());
  Eigen::Index j = 0;
  for (double value : values) v[j++] = value;
  return v;
}

// Central differences of the client value; the y block is negated.
SaddlePoint FiniteDifferenceMapping(const FederatedProblem& problem,
                                    int client, const SaddlePoint& z,
                                    double h) {
  SaddlePoint g(z.primal_dim(), z.dual_dim());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    SaddlePoint plus = z;
    SaddlePoint minus = z;
    plus.joint()[j] += h;
    minus.joint()[j] -= h;
    const double slope =
        (problem.ClientValue(client, plus) - problem.ClientValue(client, minus)) /
        (2.0 * h);
    g.joint()[j] = j < z.primal_dim() ? slope : -slope;
  }
  return g;
}

TEST(SaddlePointTest, NormIsJointNorm) {
  const SaddlePoint z(Vec({3.0}), Vec({4.0, 12.0}));
  EXPECT_EQ(z.primal_dim(), 1);
  EXPECT_EQ(z.dual_dim(), 2);
  EXPECT_DOUBLE_EQ(z.SquaredNorm(), z.x().squaredNorm() + z.y().squaredNorm());
  EXPECT_DOUBLE_EQ(z.Norm(), 13.0);
}

TEST(SaddlePointTest, Arithmetic) {
  const SaddlePoint a(Vec({1.0}), Vec({2.0}));
  const SaddlePoint b(Vec({0.5}), Vec({-1.0}));
  EXPECT_EQ((a + b).joint(), Vec({1.5, 1.0}));
  EXPECT_EQ((a - b).joint(), Vec({0.5, 3.0}));
  EXPECT_EQ((2.0 * a).joint(), Vec({2.0, 4.0}));
  SaddlePoint c = a;
  c.AddScaled(-2.0, b);
  EXPECT_EQ(c.joint(), Vec({0.0, 4.0}));
  EXPECT_DOUBLE_EQ(Dot(a, b), -1.5);
  EXPECT_DOUBLE_EQ(SquaredDistance(a, b), 9.25);
}

TEST(SaddlePointTest, ShapeMismatchThrows) {
  const SaddlePoint a(1, 2);
  const SaddlePoint b(2, 1);
  SaddlePoint c = a;
  EXPECT_THROW(c += b, InvalidInputError);
  EXPECT_THROW(SquaredDistance(a, b), InvalidInputError);
  const std::vector<SaddlePoint> mixed = {a, b};
  EXPECT_THROW(Mean(mixed), InvalidInputError);
  EXPECT_THROW(Mean(std::vector<SaddlePoint>{}), InvalidInputError);
}

TEST(SaddlePointTest, MeanOfIdenticalPointsIsBitwiseIdentity) {
  Rng rng(3);
  const SaddlePoint z = RandomPoint(rng, 7, 7);
  const std::vector<SaddlePoint> copies(13, z);
  EXPECT_TRUE(testing::BitwiseEqual(Mean(copies), z));
}

TEST(SaddlePointTest, MeanMatchesArithmeticMean) {
  Rng rng(4);
  std::vector<SaddlePoint> points;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(6);
  for (int i = 0; i < 5; ++i) {
    points.push_back(RandomPoint(rng, 3, 3));
    sum += points.back().joint();
  }
  EXPECT_LE((Mean(points).joint() - sum / 5.0).lpNorm<Eigen::Infinity>(),
            1e-15);
}

TEST(RandomTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int k = 0; k < 1000; ++k) {
    ASSERT_EQ(a.Uniform(), b.Uniform());
    ASSERT_EQ(a.StandardNormal(), b.StandardNormal());
  }
}

TEST(RandomTest, MixSeedSeparatesStreams) {
  EXPECT_NE(MixSeed(1, 0), MixSeed(1, 1));
  EXPECT_NE(MixSeed(1, 0), MixSeed(2, 0));
  EXPECT_NE(MixSeed(1, "coin"), MixSeed(1, "noise"));
  EXPECT_EQ(MixSeed(9, "noise"), MixSeed(9, "noise"));
}

TEST(RandomTest, UniformInUnitInterval) {
  Rng rng(5);
  for (int k = 0; k < 100000; ++k) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomTest, NormalMoments) {
  Rng rng(6);
  constexpr int kDraws = 200000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < kDraws; ++k) {
    const double v = rng.Normal(2.0, 3.0);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / kDraws;
  const double variance = sum_sq / kDraws - mean * mean;
  EXPECT_NEAR(mean, 2.0, 3.0 * 3.0 / std::sqrt(kDraws));
  EXPECT_NEAR(variance, 9.0, 0.1);
}

TEST(ProblemConstantsTest, Validation) {
  ProblemConstants c;
  c.mu = 0.5;
  c.beta = 2.0;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_DOUBLE_EQ(c.kappa(), 4.0);
  c.mu = 0.0;
  EXPECT_THROW(c.Validate(), InvalidInputError);
  c.mu = 3.0;
  EXPECT_THROW(c.Validate(), InvalidInputError);
  c.mu = 1.0;
  c.sigma = -1.0;
  EXPECT_THROW(c.Validate(), InvalidInputError);
}

TEST(GradientMappingTest, HandExampleOneDimension) {
  // f = -1/2 [y^2 - y + 2xy] + 0.25 x^2 at (1, 1).
  const TestbedInstance instance({Vec({2.0})}, {Vec({1.0})}, 0.5);
  const SaddlePoint z(Vec({1.0}), Vec({1.0}));
  const SaddlePoint g = instance.ClientGradientMapping(0, z);
  EXPECT_NEAR(g.x()[0], -0.5, 1e-15);
  EXPECT_NEAR(g.y()[0], 1.5, 1e-15);
  const SaddlePoint fd = FiniteDifferenceMapping(instance, 0, z, 1e-6);
  EXPECT_NEAR(fd.x()[0], -0.5, 1e-8);
  EXPECT_NEAR(fd.y()[0], 1.5, 1e-8);
}

TEST(GradientMappingTest, ZeroDataZeroAtOrigin) {
  const TestbedInstance instance({Vec({1.0, 1.0}), Vec({1.0, 1.0})},
                                 {Vec({0.0, 0.0}), Vec({0.0, 0.0})}, 1e-12);
  const SaddlePoint origin(2, 2);
  EXPECT_EQ(instance.ClientGradientMapping(1, origin).SquaredNorm(), 0.0);
  EXPECT_EQ(instance.GradientMapping(origin).SquaredNorm(), 0.0);
}

TEST(GradientMappingTest, GlobalMappingVanishesAtOriginOnGeneratedInstances) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const auto instance = GenerateInstance(7.0, 10, 10, 1e-5, seed);
    EXPECT_LE(instance.GradientMapping(SaddlePoint(10, 10)).Norm(), 1e-14);
  }
}

TEST(GradientMappingTest, MatchesFiniteDifferencesOnRandomPoints) {
  Rng rng(11);
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const auto instance = GenerateInstance(3.0, 5, 4, 0.1, seed);
    for (int point = 0; point < 100; ++point) {
      const SaddlePoint z = RandomPoint(rng, 5, 5);
      const int client = point % 4;
      const SaddlePoint g = instance.ClientGradientMapping(client, z);
      const SaddlePoint fd = FiniteDifferenceMapping(instance, client, z, 1e-3);
      for (Eigen::Index j = 0; j < z.size(); ++j) {
        const double scale =
            std::max(std::abs(g.joint()[j]), std::abs(fd.joint()[j]));
        if (scale == 0.0) continue;
        ASSERT_LT(std::abs(g.joint()[j] - fd.joint()[j]) / scale, 1e-5);
      }
    }
  }
}

TEST(GradientMappingTest, GlobalIsClientMean) {
  const auto instance = GenerateInstance(4.0, 3, 6, 0.2, 8);
  Rng rng(8);
  const SaddlePoint z = RandomPoint(rng, 3, 3);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(6);
  for (int i = 0; i < 6; ++i) {
    sum += instance.ClientGradientMapping(i, z).joint();
  }
  EXPECT_LE((instance.GradientMapping(z).joint() - sum / 6.0)
                .lpNorm<Eigen::Infinity>(),
            1e-14);
}

TEST(GradientMappingTest, RejectsBadClientAndShape) {
  const auto instance = GenerateInstance(1.0, 3, 2, 0.1, 1);
  EXPECT_THROW(instance.ClientGradientMapping(2, SaddlePoint(3, 3)),
               InvalidInputError);
  EXPECT_THROW(instance.ClientGradientMapping(-1, SaddlePoint(3, 3)),
               InvalidInputError);
  EXPECT_THROW(instance.ClientGradientMapping(0, SaddlePoint(2, 3)),
               InvalidInputError);
  EXPECT_THROW(instance.GradientMapping(SaddlePoint(3, 4)), InvalidInputError);
}

TEST(GradientMappingTest, StrongMonotonicityAndLipschitz) {
  Rng rng(12);
  for (double s : {0.0, 2.0, 10.0}) {
    const auto instance = GenerateInstance(s, 6, 5, 0.05, 77);
    const double mu = instance.constants().mu;
    const double beta = instance.constants().beta;
    for (int k = 0; k < 100; ++k) {
      const SaddlePoint z = RandomPoint(rng, 6, 6);
      const SaddlePoint w = RandomPoint(rng, 6, 6);
      const SaddlePoint dg = instance.GradientMapping(z) -
                             instance.GradientMapping(w);
      const double dist_sq = SquaredDistance(z, w);
      EXPECT_GE(Dot(dg, z - w), mu * dist_sq - 1e-9);
      EXPECT_LE(dg.Norm(), 2.0 * beta * std::sqrt(dist_sq) + 1e-12);
    }
  }
}

TEST(DualityGapTest, ZeroAtOptimumAndStronglyBoundedBelow) {
  Rng rng(13);
  const auto instance = GenerateInstance(5.0, 10, 10, 1e-2, 3);
  const SaddlePoint z_star = testbed::OptimalPoint(instance);
  EXPECT_EQ(DualityGap(instance, z_star, z_star), 0.0);
  const double mu = instance.constants().mu;
  for (int k = 0; k < 100; ++k) {
    const SaddlePoint z = RandomPoint(rng, 10, 10, 2.0);
    EXPECT_GE(DualityGap(instance, z, z_star),
              0.5 * mu * SquaredDistance(z, z_star) - 1e-9);
  }
}

TEST(DualityGapTest, SeparableInstanceClosedForm) {
  // With A_i = 0: x* = 0, y* = b_bar / 2 and
  // gap = lambda/2 ||x||^2 + 1/2 ||y - b_bar/2||^2.
  const double lambda = 0.3;
  const TestbedInstance instance({Vec({0.0, 0.0}), Vec({0.0, 0.0})},
                                 {Vec({1.0, -2.0}), Vec({3.0, 0.0})}, lambda);
  const Eigen::VectorXd b_bar = Vec({2.0, -1.0});
  const SaddlePoint z_star(Vec({0.0, 0.0}), 0.5 * b_bar);
  Rng rng(14);
  for (int k = 0; k < 20; ++k) {
    const SaddlePoint z = RandomPoint(rng, 2, 2);
    const double expected = 0.5 * lambda * z.x().squaredNorm() +
                            0.5 * (z.y() - 0.5 * b_bar).squaredNorm();
    EXPECT_NEAR(DualityGap(instance, z, z_star), expected, 1e-12);
  }
}

TEST(RegularizedProblemTest, MappingIdentityAndConstants) {
  const auto instance = GenerateInstance(3.0, 4, 3, 0.1, 2);
  Rng rng(15);
  const SaddlePoint anchor = RandomPoint(rng, 4, 4);
  const RegularizedProblem regularized(instance, 0.7, anchor);
  EXPECT_DOUBLE_EQ(regularized.constants().mu, instance.constants().mu + 0.7);
  EXPECT_DOUBLE_EQ(regularized.constants().beta,
                   instance.constants().beta + 0.7);
  for (int k = 0; k < 10; ++k) {
    const SaddlePoint z = RandomPoint(rng, 4, 4);
    for (int i = 0; i < 3; ++i) {
      SaddlePoint expected = instance.ClientGradientMapping(i, z);
      expected.AddScaled(0.7, z - anchor);
      EXPECT_LE(MaxAbsDiff(regularized.ClientGradientMapping(i, z), expected),
                1e-15);
    }
    const double value_expected =
        instance.Value(z) +
        0.35 * ((z.x() - anchor.x()).squaredNorm() -
                (z.y() - anchor.y()).squaredNorm());
    EXPECT_NEAR(regularized.Value(z), value_expected, 1e-12);
  }
  EXPECT_THROW(RegularizedProblem(instance, -0.1, anchor), InvalidInputError);
  EXPECT_THROW(RegularizedProblem(instance, 1.0, SaddlePoint(3, 4)),
               InvalidInputError);
}

TEST(NoisyOracleTest, ZeroSigmaIsBitwiseExact) {
  const auto instance = GenerateInstance(2.0, 5, 3, 0.1, 4);
  NoisyOracle oracle(instance, 0.0, 1);
  Rng rng(16);
  for (int k = 0; k < 10; ++k) {
    const SaddlePoint z = RandomPoint(rng, 5, 5);
    EXPECT_TRUE(testing::BitwiseEqual(oracle.Query(k % 3, z),
                                      instance.ClientGradientMapping(k % 3, z)));
  }
}

TEST(NoisyOracleTest, UnbiasedWithUnitTotalVariance) {
  const auto instance = GenerateInstance(2.0, 5, 3, 0.1, 4);
  NoisyOracle oracle(instance, 1.0, 99);
  const SaddlePoint z = SaddlePoint::Constant(5, 5, 0.5);
  const SaddlePoint exact = instance.ClientGradientMapping(1, z);
  const SaddlePoint first = oracle.Query(1, z);
  const SaddlePoint second = oracle.Query(1, z);
  EXPECT_FALSE(first == second);

  constexpr int kDraws = 100000;
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(10);
  double sum_norm_sq = 0.0;
  for (int k = 0; k < kDraws; ++k) {
    const Eigen::VectorXd noise = (oracle.Query(1, z) - exact).joint();
    sum += noise;
    sum_norm_sq += noise.squaredNorm();
  }
  EXPECT_LE((sum / kDraws).lpNorm<Eigen::Infinity>(), 3e-2);
  EXPECT_NEAR(sum_norm_sq / kDraws, 1.0, 0.05);
}

TEST(NoisyOracleTest, SameSeedSameQueries) {
  const auto instance = GenerateInstance(2.0, 3, 2, 0.1, 4);
  NoisyOracle a(instance, 0.4, 5);
  NoisyOracle b(instance, 0.4, 5);
  const SaddlePoint z = SaddlePoint::Constant(3, 3, 1.0);
  for (int k = 0; k < 50; ++k) {
    ASSERT_TRUE(testing::BitwiseEqual(a.Query(k % 2, z), b.Query(k % 2, z)));
  }
}

TEST(NoisyOracleTest, RejectsNegativeSigmaAndForeignShapes) {
  const auto instance = GenerateInstance(2.0, 3, 2, 0.1, 4);
  EXPECT_THROW(NoisyOracle(instance, -1.0, 0), InvalidInputError);
  NoisyOracle oracle(instance, 0.0, 0);
  const auto other = GenerateInstance(2.0, 4, 2, 0.1, 4);
  EXPECT_THROW(oracle.Rebind(other), InvalidInputError);
  const RegularizedProblem regularized(instance, 1.0, SaddlePoint(3, 3));
  oracle.Rebind(regularized);
  EXPECT_EQ(&oracle.problem(), &regularized);
}

}  // namespace
}  // namespace fedsaddle
