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

#include "fedsaddle/harness/verification.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <thread>

#include "fedsaddle/algorithms/framework.h"
#include "fedsaddle/algorithms/minibatch.h"
#include "fedsaddle/algorithms/run.h"
#include "fedsaddle/algorithms/stepsize.h"
#include "fedsaddle/core/errors.h"
#include "fedsaddle/core/noisy_oracle.h"
#include "fedsaddle/core/random.h"
#include "fedsaddle/harness/config.h"
#include "fedsaddle/harness/csv.h"
#include "fedsaddle/harness/experiment.h"
#include "fedsaddle/testbed/testbed.h"

namespace fedsaddle {
namespace {

using testbed::ClosedFormProx;
using testbed::GenerateInstance;
using testbed::OptimalPoint;
using testbed::TestbedInstance;

constexpr uint64_t kVerifySeed = 20260521;

std::string Fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", value);
  return buffer;
}

SaddlePoint RandomPoint(Rng& rng, Eigen::Index d, double scale = 1.0) {
  SaddlePoint z(d, d);
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    z.joint()[j] = scale * rng.StandardNormal();
  }
  return z;
}

// The 20 instances shared by the oracle checks: d = n = 10, s cycling
// through {0, 5, 10}.
std::vector<TestbedInstance> OracleInstances() {
  std::vector<TestbedInstance> instances;
  constexpr double kS[] = {0.0, 5.0, 10.0};
  for (uint64_t k = 0; k < 20; ++k) {
    instances.push_back(
        GenerateInstance(kS[k % 3], 10, 10, 1e-5, MixSeed(kVerifySeed, k)));
  }
  return instances;
}

// G computed straight from the coefficients, without FederatedProblem.
Eigen::VectorXd DirectMapping(const TestbedInstance& instance,
                              const Eigen::VectorXd& z) {
  const Eigen::Index d = instance.dim();
  const auto x = z.head(d).array();
  const auto y = z.tail(d).array();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(2 * d);
  for (int i = 0; i < instance.num_clients(); ++i) {
    const auto a = instance.a()[i].array();
    const auto b = instance.b()[i].array();
    sum.head(d).array() += instance.lambda() * x - 0.5 * a * y;
    sum.tail(d).array() += y - 0.5 * b + 0.5 * a * x;
  }
  return sum / instance.num_clients();
}

double IndependentTheoremStepsize(const TheoremStepsizeParams& p) {
  const double inf = std::numeric_limits<double>::infinity();
  const double k = static_cast<double>(p.iterations);
  const double t1 = p.c1 == 0.0 ? inf : p.a * p.mu * p.mu * k * k / p.c1;
  const double t2 =
      p.c2 == 0.0 ? inf : p.a * p.mu * p.mu * p.mu * k * k * k / p.c2;
  const double inner = std::max(2.0, std::min(t1, t2));
  if (std::isinf(inner)) return p.gamma_max;
  return std::min(p.gamma_max, std::log(inner) / (p.c3 * p.mu * k));
}

CheckResult Result(std::string id, std::string name, bool passed,
                   std::string measured) {
  return {std::move(id), std::move(name), passed, std::move(measured), 0.0};
}

}  // namespace

CheckResult CheckGradientOracle() {
  const auto start = std::chrono::steady_clock::now();
  constexpr double kStep = 1e-3;
  double worst = 0.0;
  Rng rng(MixSeed(kVerifySeed, "a1"));
  for (const TestbedInstance& instance : OracleInstances()) {
    const SaddlePoint z = RandomPoint(rng, instance.dim());
    const Eigen::Index d = instance.dim();
    for (int i = 0; i < instance.num_clients(); ++i) {
      const SaddlePoint g = instance.ClientGradientMapping(i, z);
      for (Eigen::Index j = 0; j < z.size(); ++j) {
        SaddlePoint plus = z;
        SaddlePoint minus = z;
        plus.joint()[j] += kStep;
        minus.joint()[j] -= kStep;
        double fd = (instance.ClientValue(i, plus) -
                     instance.ClientValue(i, minus)) /
                    (2.0 * kStep);
        if (j >= d) fd = -fd;
        const double scale = std::max(std::abs(fd), std::abs(g.joint()[j]));
        if (scale == 0.0) continue;
        worst = std::max(worst, std::abs(fd - g.joint()[j]) / scale);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return Result("A1", "gradient-oracle", worst < 1e-5 && seconds < 5.0,
                "max_rel_err=" + Fmt(worst) + " runtime_s=" + Fmt(seconds));
}

CheckResult CheckAnalyticOptimum() {
  double worst_mapping = 0.0;
  double worst_gap = -std::numeric_limits<double>::infinity();
  bool all_zero = true;
  for (const TestbedInstance& instance : OracleInstances()) {
    const SaddlePoint z_star = OptimalPoint(instance);
    all_zero &= (z_star.joint().array() == 0.0).all();
    worst_mapping =
        std::max(worst_mapping, instance.GradientMapping(z_star).Norm());
    worst_gap = std::max(worst_gap, DualityGap(instance, z_star, z_star));
  }
  // Uncentered instances exercise the general closed form.
  Rng rng(MixSeed(kVerifySeed, "a2"));
  for (int k = 0; k < 5; ++k) {
    std::vector<Eigen::VectorXd> a(10), b(10);
    for (int i = 0; i < 10; ++i) {
      a[i] = Eigen::VectorXd(10);
      b[i] = Eigen::VectorXd(10);
      for (int j = 0; j < 10; ++j) {
        a[i][j] = std::max(1.0, 1.0 + 3.0 * rng.StandardNormal());
        b[i][j] = 3.0 * rng.StandardNormal();
      }
    }
    const TestbedInstance instance(a, b, 1e-5);
    const SaddlePoint z_star = OptimalPoint(instance);
    worst_mapping =
        std::max(worst_mapping, instance.GradientMapping(z_star).Norm());
    worst_gap = std::max(worst_gap, DualityGap(instance, z_star, z_star));
  }
  return Result("A2", "analytic-optimum",
                worst_mapping <= 1e-10 && worst_gap <= 1e-18 && all_zero,
                "max_mapping_norm=" + Fmt(worst_mapping) +
                    " max_gap=" + Fmt(worst_gap) +
                    " generated_zero=" + (all_zero ? "yes" : "no"));
}

CheckResult CheckProxOracle() {
  const TestbedInstance instance =
      GenerateInstance(5.0, 10, 10, 0.1, MixSeed(kVerifySeed, "a3"));
  const double mu = instance.constants().mu;
  Rng rng(MixSeed(kVerifySeed, "a3-points"));
  double worst_residual = 0.0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (double theta : {0.1, 1.0, 10.0}) {
    const double bound = 1.0 - mu / (theta + mu);
    for (int k = 0; k < 100; ++k) {
      const SaddlePoint u = RandomPoint(rng, 10, 3.0);
      const SaddlePoint v = RandomPoint(rng, 10, 3.0);
      const SaddlePoint pu = ClosedFormProx(instance, {theta, u});
      const SaddlePoint pv = ClosedFormProx(instance, {theta, v});
      worst_residual = std::max(
          {worst_residual, testbed::ProxResidual(instance, {theta, u}, pu),
           testbed::ProxResidual(instance, {theta, v}, pv)});
      const double ratio = Distance(pu, pv) / Distance(u, v);
      worst_excess = std::max(worst_excess, ratio - bound);
    }
  }
  return Result("A3", "prox-oracle",
                worst_residual <= 1e-10 && worst_excess <= 1e-9,
                "max_residual=" + Fmt(worst_residual) +
                    " max_factor_minus_bound=" + Fmt(worst_excess));
}

CheckResult CheckGdaReduction() {
  const TestbedInstance instance =
      GenerateInstance(5.0, 10, 10, 1e-5, MixSeed(kVerifySeed, "a4"));
  constexpr double kGamma = 0.05;
  NoisyOracle oracle(instance, 0.0, 0);
  FedAvgDirection direction(oracle);
  SyncSchedule schedule = SyncSchedule::Probabilistic(1.0, 1);
  const StepsizeSchedule steps = StepsizeSchedule::Constant(kGamma, kGamma);
  const SaddlePoint z0 = SaddlePoint::Constant(10, 10, 1.0);
  RunState state = RunState::Initial(z0, instance.num_clients());
  direction.OnSynchronize(state);

  Eigen::VectorXd gda = z0.joint();
  double worst = 0.0;
  int syncs = 0;
  for (int k = 0; k < 100; ++k) {
    syncs += FrameworkStep(state, direction, schedule, steps).synchronized;
    gda -= kGamma * DirectMapping(instance, gda);
    worst = std::max(
        worst, (state.VirtualIterate().joint() - gda).lpNorm<Eigen::Infinity>());
  }
  return Result("A4", "gda-reduction", worst <= 1e-12 && syncs == 100,
                "max_deviation=" + Fmt(worst) +
                    " syncs=" + std::to_string(syncs));
}

CheckResult CheckCatalystInvariances() {
  std::vector<TestbedInstance> instances;
  for (double s : {0.0, 5.0, 15.0}) {
    instances.push_back(GenerateInstance(s, 10, 10, 1e-5,
                                         MixSeed(kVerifySeed, "a5") + s));
  }
  Rng rng(MixSeed(kVerifySeed, "a5-tuples"));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const TestbedInstance& instance = instances[k % instances.size()];
    const int i = static_cast<int>(rng.Uniform() * 10);
    const int j = (i + 1 + static_cast<int>(rng.Uniform() * 9)) % 10;
    const double theta = 10.0 * rng.Uniform();
    const SaddlePoint z = RandomPoint(rng, 10);
    const SaddlePoint anchor = RandomPoint(rng, 10);
    const RegularizedProblem regularized(instance, theta, anchor);
    const double lhs = Distance(regularized.ClientGradientMapping(i, z),
                                regularized.ClientGradientMapping(j, z));
    const double rhs = Distance(instance.ClientGradientMapping(i, z),
                                instance.ClientGradientMapping(j, z));
    worst = std::max(worst, std::abs(lhs - rhs));
  }

  const TestbedInstance& instance = instances[1];
  AlgorithmConfig config;
  config.sync.probabilistic = true;
  config.sync.p = 0.2;
  config.sigma = 0.1;
  config.steps = StepsizeSchedule::Constant(0.02, 0.02);
  config.catalyst.theta = 0.0;
  MetricsContext metrics;
  metrics.z_star = OptimalPoint(instance);
  const SaddlePoint z0 = SaddlePoint::Constant(10, 10, 1.0);
  config.algorithm = Algorithm::kScaffoldS;
  const Trace plain = RunAlgorithm(config, instance, z0, 40, 7, metrics);
  config.algorithm = Algorithm::kScaffoldCatalystS;
  const Trace catalyst = RunAlgorithm(config, instance, z0, 40, 7, metrics);
  bool identical = plain.rows.size() == catalyst.rows.size() &&
                   plain.output == catalyst.output;
  for (size_t r = 0; identical && r < plain.rows.size(); ++r) {
    TraceRow row = catalyst.rows[r];
    row.meta_t.reset();
    identical = row == plain.rows[r];
  }
  return Result("A5", "catalyst-invariances", worst <= 1e-12 && identical,
                "max_norm_diff=" + Fmt(worst) + " theta0_trace_equal=" +
                    (identical ? "yes" : "no") +
                    " rows=" + std::to_string(plain.rows.size()));
}

CheckResult CheckProximalPointMeta() {
  const TestbedInstance instance =
      GenerateInstance(5.0, 10, 10, 0.01, MixSeed(kVerifySeed, "a6"));
  const double mu = instance.constants().mu;
  const double beta = instance.constants().beta;
  const SaddlePoint z_star = OptimalPoint(instance);
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::string measured;
  for (double theta : {mu, beta - mu}) {
    AlgorithmConfig config;
    config.algorithm = Algorithm::kScaffoldCatalystS;
    config.catalyst.theta = theta;
    config.catalyst.exact_inner = true;
    config.catalyst.prox = [&instance](const SaddlePoint& anchor, double th) {
      return ClosedFormProx(instance, {th, anchor});
    };
    const Trace trace =
        RunAlgorithm(config, instance, SaddlePoint::Constant(10, 10, 1.0), 40,
                     0, MetricsContext{});
    const double bound = 1.0 - mu / (theta + mu);
    double worst_ratio = 0.0;
    for (const CatalystMetaRecord& record : trace.meta) {
      const double before = Distance(record.anchor, z_star);
      if (before == 0.0) continue;
      worst_ratio =
          std::max(worst_ratio, Distance(record.next, z_star) / before);
    }
    worst_excess = std::max(worst_excess, worst_ratio - bound);
    measured += "theta=" + Fmt(theta) + ":ratio=" + Fmt(worst_ratio) +
                ",bound=" + Fmt(bound) + " ";
  }
  measured += "max_excess=" + Fmt(worst_excess);
  return Result("A6", "proximal-point-meta", worst_excess <= 1e-9, measured);
}

CheckResult CheckScaffoldInnerAccuracy() {
  const TestbedInstance instance =
      GenerateInstance(5.0, 10, 10, 1e-5, MixSeed(kVerifySeed, "a7"));
  const double mu = instance.constants().mu;
  constexpr double kTheta = 1.0;
  constexpr double kTarget = 1e-4;
  AlgorithmConfig config;
  config.algorithm = Algorithm::kScaffoldCatalystS;
  config.sync.tau = 20;
  config.steps = StepsizeSchedule::Constant(0.1 / 5.0, 0.1 / 5.0);
  config.catalyst.theta = kTheta;
  config.catalyst.stop = CatalystConfig::InnerStop::kProxDistance;
  // Squared target (mu / (2(theta + mu)))^2 eps equals kTarget^2.
  config.catalyst.epsilon =
      kTarget * kTarget / std::pow(mu / (2.0 * (kTheta + mu)), 2);
  config.catalyst.max_inner_rounds = 50;
  config.catalyst.max_meta_iterations = 3;
  config.catalyst.prox = [&instance](const SaddlePoint& anchor, double th) {
    return ClosedFormProx(instance, {th, anchor});
  };
  const Trace trace =
      RunAlgorithm(config, instance, SaddlePoint::Constant(10, 10, 1.0), 150,
                   kVerifySeed, MetricsContext{});
  bool passed = trace.meta.size() == 3;
  std::string measured;
  for (const CatalystMetaRecord& record : trace.meta) {
    const double distance = record.prox_distance.value_or(
        std::numeric_limits<double>::infinity());
    passed &= distance <= kTarget && record.inner_rounds <= 50;
    measured += "t" + std::to_string(record.t) + ":dist=" + Fmt(distance) +
                ",rounds=" + std::to_string(record.inner_rounds) + " ";
  }
  measured += "meta_iterations=" + std::to_string(trace.meta.size());
  return Result("A7", "scaffold-inner-accuracy", passed, measured);
}

CheckResult CheckQualitativeSweep() {
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig config;
  config.s_values = {0.0, 10.0, 15.0};
  config.record_every = 0;
  config.jobs = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  const ExperimentResult result = RunExperiment(config, false, false);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  std::map<std::pair<std::string, double>, double> best;
  for (const SummaryRow& row : result.summary) {
    best[{row.algorithm, row.s}] = row.mean_final_dist_sq;
  }
  const double initial =
      InitialPoint(config.init, config.d).SquaredNorm();  // z* = 0
  const std::string catalyst = "scaffold-catalyst-s";

  bool a = true;
  std::string measured = "s0:";
  for (Algorithm algorithm : config.algorithms) {
    const std::string name(AlgorithmName(algorithm));
    const double value = best[{name, 0.0}];
    a &= value <= 1e-3 * initial;
    measured += name + "=" + Fmt(value) + ",";
  }
  measured.pop_back();
  bool b = true;
  for (double s : {10.0, 15.0}) {
    measured += " s" + std::to_string(static_cast<int>(s)) + ":";
    for (Algorithm algorithm : config.algorithms) {
      const std::string name(AlgorithmName(algorithm));
      const double value = best[{name, s}];
      measured += name + "=" + Fmt(value) + ",";
      if (name != catalyst) b &= best[{catalyst, s}] <= value;
    }
    measured.pop_back();
  }
  const double catalyst_ratio = best[{catalyst, 15.0}] / best[{catalyst, 0.0}];
  const double fedavg_ratio =
      best[{"fedavg-s", 15.0}] / best[{"fedavg-s", 0.0}];
  const bool c = catalyst_ratio <= 10.0 && fedavg_ratio > 10.0;
  measured += " (a)=" + std::string(a ? "pass" : "fail") +
              " (b)=" + (b ? "pass" : "fail") + " (c)=" + (c ? "pass" : "fail") +
              " catalyst_ratio=" + Fmt(catalyst_ratio) +
              " fedavg_ratio=" + Fmt(fedavg_ratio) +
              " runtime_s=" + Fmt(seconds);
  return Result("A8", "qualitative-sweep", a && b && c && seconds < 300.0,
                measured);
}

CheckResult CheckExtragradient() {
  ProblemConstants constants;
  constants.mu = 1e-12;
  constants.beta = 1.0;
  const CallbackProblem bilinear(
      constants, 1, 1,
      {[](const SaddlePoint& z) { return z.x()[0] * z.y()[0]; }},
      {[](const SaddlePoint& z) {
        Eigen::VectorXd g(2);
        g << z.y()[0], -z.x()[0];
        return SaddlePoint(g, 1);
      }});
  NoisyOracle oracle(bilinear, 0.0, 0);
  constexpr double kEta = 0.1;
  const SaddlePoint start = SaddlePoint::Constant(1, 1, 1.0);
  const MirrorProxStep step = MinibatchMpRound(start, oracle, 1, kEta);
  Eigen::VectorXd expected_half(2), expected_next(2);
  expected_half << 0.9, 1.1;
  expected_next << 0.89, 1.09;
  const double deviation = std::max(
      (step.half_point.joint() - expected_half).lpNorm<Eigen::Infinity>(),
      (step.next.joint() - expected_next).lpNorm<Eigen::Infinity>());

  bool mp_contracts = true;
  bool gda_expands = true;
  SaddlePoint mp = start;
  SaddlePoint gda = start;
  for (int r = 0; r < 100; ++r) {
    const SaddlePoint mp_next = MinibatchMpRound(mp, oracle, 1, kEta).next;
    const SaddlePoint gda_next = MinibatchMdRound(gda, oracle, 1, kEta);
    mp_contracts &= mp_next.Norm() < mp.Norm();
    gda_expands &= gda_next.Norm() > gda.Norm();
    mp = mp_next;
    gda = gda_next;
  }
  return Result("A9", "extragradient",
                deviation <= 1e-15 && mp_contracts && gda_expands,
                "max_deviation=" + Fmt(deviation) +
                    " mp_norm_100=" + Fmt(mp.Norm()) +
                    " gda_norm_100=" + Fmt(gda.Norm()));
}

CheckResult CheckCommunication() {
  const TestbedInstance instance =
      GenerateInstance(1.0, 2, 2, 0.1, MixSeed(kVerifySeed, "a10"));
  NoisyOracle oracle(instance, 0.0, 0);
  FedAvgDirection direction(oracle);
  constexpr double kP = 0.05;
  constexpr int kIterations = 10000;
  SyncSchedule schedule =
      SyncSchedule::Probabilistic(kP, MixSeed(kVerifySeed, "a10-coins"));
  const StepsizeSchedule steps = StepsizeSchedule::Constant(0.01, 0.01);
  RunState state =
      RunState::Initial(SaddlePoint::Constant(2, 2, 1.0), instance.num_clients());
  for (int k = 0; k < kIterations; ++k) {
    FrameworkStep(state, direction, schedule, steps);
  }
  const double expected = kIterations * kP;
  const double relative =
      std::abs(static_cast<double>(state.comm_rounds) - expected) / expected;

  AlgorithmConfig config;
  config.algorithm = Algorithm::kMinibatchMp;
  bool mp_exact = true;
  for (int64_t budget : {500, 501}) {
    const Trace trace =
        RunAlgorithm(config, instance, SaddlePoint::Constant(2, 2, 1.0), budget,
                     0, MetricsContext{});
    mp_exact &= trace.comm_rounds == 2 * trace.iterations &&
                trace.iterations == budget / 2;
    for (const TraceRow& row : trace.rows) mp_exact &= row.comm_rounds == 2 * row.k;
  }
  return Result("A10", "communication-accounting",
                relative <= 0.05 && mp_exact,
                "rounds=" + std::to_string(state.comm_rounds) +
                    " expected=" + Fmt(expected) +
                    " rel_err=" + Fmt(relative) +
                    " mp_two_rounds=" + (mp_exact ? "yes" : "no"));
}

CheckResult CheckTheoremStepsize() {
  std::vector<TheoremStepsizeParams> cases;
  Rng rng(MixSeed(kVerifySeed, "a11"));
  for (int k = 0; k < 10; ++k) {
    TheoremStepsizeParams p;
    p.a = 0.1 + 10.0 * rng.Uniform();
    p.mu = 0.01 + rng.Uniform();
    p.iterations = 1 + static_cast<int64_t>(1000 * rng.Uniform());
    p.c1 = 5.0 * rng.Uniform();
    p.c2 = 5.0 * rng.Uniform();
    p.c3 = 0.05 + 0.95 * rng.Uniform();
    p.gamma_max = 1e-3 + rng.Uniform();
    cases.push_back(p);
  }
  TheoremStepsizeParams example{1.0, 1.0, 1.0, 0.25, 10.0, 1.0, 100};
  cases.push_back(example);
  TheoremStepsizeParams saturated = example;
  saturated.gamma_max = 1e-6;
  cases.push_back(saturated);
  TheoremStepsizeParams both_zero = example;
  both_zero.c1 = both_zero.c2 = 0.0;
  cases.push_back(both_zero);
  TheoremStepsizeParams c1_zero = example;
  c1_zero.c1 = 0.0;
  cases.push_back(c1_zero);
  TheoremStepsizeParams c2_zero = example;
  c2_zero.c2 = 0.0;
  cases.push_back(c2_zero);

  double worst = 0.0;
  for (const TheoremStepsizeParams& p : cases) {
    const double got = TheoremStepsize(p);
    const double want = IndependentTheoremStepsize(p);
    worst = std::max(worst, std::abs(got - want) / std::abs(want));
  }
  const double example_value = TheoremStepsize(example);
  const bool example_ok =
      std::abs(example_value - std::log(1e4) / 25.0) <= 1e-12;
  const bool edges_ok = TheoremStepsize(saturated) == 1e-6 &&
                        TheoremStepsize(both_zero) == example.gamma_max;
  return Result("A11", "theorem-stepsize",
                worst <= 1e-12 && example_ok && edges_ok,
                "max_rel_err=" + Fmt(worst) +
                    " example=" + FormatDouble(example_value) +
                    " cases=" + std::to_string(cases.size()));
}

std::vector<NamedCheck> SuiteChecks(std::string_view suite) {
  const std::map<std::string, std::function<CheckResult()>> all = {
      {"A1", CheckGradientOracle},      {"A2", CheckAnalyticOptimum},
      {"A3", CheckProxOracle},          {"A4", CheckGdaReduction},
      {"A5", CheckCatalystInvariances}, {"A6", CheckProximalPointMeta},
      {"A7", CheckScaffoldInnerAccuracy},
      {"A8", CheckQualitativeSweep},    {"A9", CheckExtragradient},
      {"A10", CheckCommunication},      {"A11", CheckTheoremStepsize},
  };
  std::vector<std::string> ids;
  if (suite == "oracles") {
    ids = {"A1", "A2", "A3", "A11"};
  } else if (suite == "identities") {
    ids = {"A4", "A5", "A9", "A10"};
  } else if (suite == "convergence") {
    ids = {"A6", "A7", "A8"};
  } else if (suite == "all") {
    ids = {"A1", "A2", "A3", "A4", "A5", "A6",
           "A7", "A8", "A9", "A10", "A11"};
  } else {
    throw ConfigError("unknown verification suite '" + std::string(suite) +
                      "'");
  }
  std::vector<NamedCheck> checks;
  for (const std::string& id : ids) checks.push_back({id, all.at(id)});
  return checks;
}

std::vector<CheckResult> RunSuite(std::string_view suite) {
  std::vector<CheckResult> results;
  for (const NamedCheck& check : SuiteChecks(suite)) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result = check.run();
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    results.push_back(std::move(result));
  }
  return results;
}

std::string FormatCheck(const CheckResult& result) {
  char seconds[32];
  std::snprintf(seconds, sizeof(seconds), "%.2fs", result.seconds);
  return result.id + " " + (result.passed ? "PASS" : "FAIL") + " " +
         result.name + " " + result.measured + " (" + seconds + ")";
}

}  // namespace fedsaddle
