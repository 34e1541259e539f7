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
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/harness/config.h"
#include "fedsaddle/harness/csv.h"
#include "fedsaddle/harness/experiment.h"
#include "fedsaddle/harness/verification.h"
#include "gtest/gtest.h"

namespace fedsaddle {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fedsaddle_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::map<std::string, std::string> ReadDirectory(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    files[entry.path().filename().string()] = ReadFile(entry.path());
  }
  return files;
}

ExperimentConfig SmallConfig(const fs::path& dir) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::kMinibatchMd, Algorithm::kFedAvgS,
                       Algorithm::kScaffoldS, Algorithm::kScaffoldCatalystS};
  config.s_values = {0.0, 2.0};
  config.d = 4;
  config.n = 3;
  config.lambda = 0.01;
  config.sync.tau = 5;
  config.budget = 12;
  config.seeds = 2;
  config.sigma = 0.1;
  config.record_every = 4;
  config.output_dir = dir.string();
  return config;
}

TEST(CsvTest, DoubleRoundTrip) {
  std::mt19937_64 engine(1);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int k = 0; k < 1000; ++k) {
    const double value = std::pow(10.0, exponent(engine)) *
                         (k % 2 == 0 ? 1.0 : -1.0);
    ASSERT_EQ(ParseDouble(FormatDouble(value)), value);
  }
  EXPECT_EQ(ParseDouble(FormatDouble(std::numeric_limits<double>::infinity())),
            std::numeric_limits<double>::infinity());
  EXPECT_TRUE(std::isnan(ParseDouble(FormatDouble(std::nan("")))));
  EXPECT_THROW(ParseDouble("1.5x"), ConfigError);
  EXPECT_THROW(ParseDouble(""), ConfigError);
}

TEST(CsvTest, TraceRoundTrip) {
  std::mt19937_64 engine(2);
  std::normal_distribution<double> normal;
  std::vector<TraceRow> rows;
  for (int k = 0; k < 100; ++k) {
    TraceRow row;
    row.algorithm = k % 2 ? "scaffold-s" : "fedavg-s";
    row.s = std::abs(normal(engine));
    row.seed = engine();
    row.gamma = std::abs(normal(engine)) * 1e-3;
    row.k = k;
    row.comm_rounds = k / 3;
    if (k % 3 != 0) row.dist_sq = std::exp(normal(engine) * 20.0);
    if (k % 4 != 0) row.gap = normal(engine);
    if (k % 5 != 0) row.drift = std::abs(normal(engine));
    if (k % 7 == 0) row.cv_error = std::numeric_limits<double>::infinity();
    if (k % 2 == 0) row.meta_t = k / 10;
    rows.push_back(row);
  }
  std::stringstream buffer;
  WriteTraceCsv(buffer, rows);
  EXPECT_EQ(buffer.str().substr(0, kTraceCsvHeader.size()), kTraceCsvHeader);
  EXPECT_EQ(ReadTraceCsv(buffer), rows);
}

TEST(CsvTest, SummaryRoundTrip) {
  const std::vector<SummaryRow> rows = {
      {"minibatch-md", 0.0, 0.1, 0, 1.5e-7, 2.5e-8, 5, 500},
      {"scaffold-s", 15.0, 0.1 / 15.0, 2,
       std::numeric_limits<double>::infinity(),
       std::numeric_limits<double>::infinity(), 5, 312}};
  std::stringstream buffer;
  WriteSummaryCsv(buffer, rows);
  EXPECT_EQ(ReadSummaryCsv(buffer), rows);
}

TEST(CsvTest, MalformedInputThrows) {
  std::stringstream wrong_header("a,b,c\n");
  EXPECT_THROW(ReadTraceCsv(wrong_header), ConfigError);
  std::stringstream short_row(std::string(kTraceCsvHeader) + "\nfedavg-s,1,2\n");
  EXPECT_THROW(ReadTraceCsv(short_row), ConfigError);
  std::stringstream bad_number(std::string(kTraceCsvHeader) +
                               "\nfedavg-s,x,0,0.1,0,0,,,,,\n");
  EXPECT_THROW(ReadTraceCsv(bad_number), ConfigError);
}

TEST(ConfigTest, ParsesKeysCommentsAndLists) {
  const ExperimentConfig config = ParseConfigText(
      "# sweep\n"
      "algorithms = fedavg-s, scaffold-s\n"
      "s = 0, 2.5  # two values\n"
      "\n"
      "grid = 0.5\n"
      "p = 0.1\n"
      "budget = 42\n"
      "catalyst_stop = prox\n"
      "scale_grid = false\n");
  EXPECT_EQ(config.algorithms,
            (std::vector<Algorithm>{Algorithm::kFedAvgS, Algorithm::kScaffoldS}));
  EXPECT_EQ(config.s_values, (std::vector<double>{0.0, 2.5}));
  EXPECT_EQ(config.grid, (std::vector<double>{0.5}));
  EXPECT_TRUE(config.sync.probabilistic);
  EXPECT_DOUBLE_EQ(config.sync.p, 0.1);
  EXPECT_EQ(config.budget, 42);
  EXPECT_EQ(config.catalyst_stop, CatalystConfig::InnerStop::kProxDistance);
  EXPECT_FALSE(config.scale_grid);
  EXPECT_EQ(config.d, 10);
}

TEST(ConfigTest, RejectsBadInput) {
  EXPECT_THROW(ParseConfigText("colour = blue\n"), ConfigError);
  EXPECT_THROW(ParseConfigText("p = 0.1\ntau = 5\n"), ConfigError);
  EXPECT_THROW(ParseConfigText("budget = many\n"), ConfigError);
  EXPECT_THROW(ParseConfigText("algorithms = sgd\n"), ConfigError);
  EXPECT_THROW(ParseConfigText("no equals sign\n"), ConfigError);
  EXPECT_THROW(LoadConfigFile("/nonexistent/fedsaddle.cfg"), IoError);
  ExperimentConfig config;
  config.seeds = 0;
  EXPECT_THROW(config.Validate(), ConfigError);
}

TEST(ConfigTest, InitialPointAndRanges) {
  EXPECT_EQ(InitialPoint("ones", 3).joint(), Eigen::VectorXd::Ones(6));
  EXPECT_EQ(InitialPoint("zeros", 2).joint(), Eigen::VectorXd::Zero(4));
  EXPECT_EQ(InitialPoint("const:2.5", 1).joint(),
            Eigen::VectorXd::Constant(2, 2.5));
  EXPECT_THROW(InitialPoint("random", 2), ConfigError);
  const std::vector<double> s = SRange(0.0, 15.0, 1.0);
  ASSERT_EQ(s.size(), 16u);
  EXPECT_EQ(s.back(), 15.0);
  EXPECT_EQ(SRange(0.0, 1.0, 0.1).size(), 11u);
  EXPECT_EQ(ParseInnerStop("fixed"), CatalystConfig::InnerStop::kFixedRounds);
  EXPECT_THROW(ParseInnerStop("never"), ConfigError);
}

TEST(ExperimentTest, SeedsSeparateAlgorithmsButShareInstances) {
  EXPECT_EQ(InstanceSeed(0, 3.0, 1), InstanceSeed(0, 3.0, 1));
  EXPECT_NE(InstanceSeed(0, 3.0, 1), InstanceSeed(0, 3.0, 2));
  EXPECT_NE(InstanceSeed(0, 3.0, 1), InstanceSeed(0, 4.0, 1));
  EXPECT_NE(RunSeed(0, Algorithm::kFedAvgS, 3.0, 0, 1),
            RunSeed(0, Algorithm::kScaffoldS, 3.0, 0, 1));
  EXPECT_NE(RunSeed(0, Algorithm::kFedAvgS, 3.0, 0, 1),
            RunSeed(0, Algorithm::kFedAvgS, 3.0, 1, 1));
  ExperimentConfig config;
  EXPECT_DOUBLE_EQ(GridStepsize(config, 0.0, 0), 0.1);
  EXPECT_DOUBLE_EQ(GridStepsize(config, 10.0, 2), 0.001);
  EXPECT_THROW(GridStepsize(config, 1.0, 3), InvalidInputError);
}

TEST(ExperimentTest, SingleCellRowCount) {
  ExperimentConfig config;
  config.budget = 10;
  CellSpec cell;
  cell.algorithm = Algorithm::kFedAvgS;
  cell.s = 3.0;
  cell.gamma_l = cell.gamma_g = GridStepsize(config, cell.s, 0);
  const CellResult result = RunCell(config, cell, true);
  EXPECT_EQ(result.comm_rounds, 10);
  EXPECT_EQ(result.rows.size(), 201u);
  EXPECT_EQ(result.rows.back().k, 200);
  EXPECT_FALSE(result.diverged);
  EXPECT_EQ(result.rows.front().algorithm, "fedavg-s");
  EXPECT_EQ(result.rows.front().seed, result.run_seed);
}

TEST(ExperimentTest, OutputIsReproducibleAndIndependentOfJobs) {
  const fs::path first = TempDir("repro_a");
  const fs::path second = TempDir("repro_b");
  const fs::path threaded = TempDir("repro_c");
  ExperimentConfig config = SmallConfig(first);
  RunExperiment(config);
  config.output_dir = second.string();
  RunExperiment(config);
  config.output_dir = threaded.string();
  config.jobs = 3;
  RunExperiment(config);
  const auto a = ReadDirectory(first);
  EXPECT_EQ(a.size(), 4u * 2u * 3u * 2u + 1u);
  EXPECT_EQ(a, ReadDirectory(second));
  EXPECT_EQ(a, ReadDirectory(threaded));
  for (const fs::path& dir : {first, second, threaded}) fs::remove_all(dir);
}

TEST(ExperimentTest, SummaryMatchesRawTraces) {
  const fs::path dir = TempDir("summary");
  const ExperimentConfig config = SmallConfig(dir);
  const ExperimentResult result = RunExperiment(config);
  const std::vector<SummaryRow> summary =
      ReadSummaryCsvFile((dir / "summary.csv").string());
  EXPECT_EQ(summary, result.summary);
  ASSERT_EQ(summary.size(), config.algorithms.size() * config.s_values.size());

  // Recompute the best grid entry from the last row of every trace file.
  std::map<std::tuple<std::string, double, int64_t>, std::vector<double>> finals;
  for (const CellResult& cell : result.cells) {
    const auto rows =
        ReadTraceCsvFile((dir / TraceFileName(cell.spec)).string());
    ASSERT_FALSE(rows.empty());
    finals[{rows.back().algorithm, cell.spec.s, cell.spec.grid_index}]
        .push_back(*rows.back().dist_sq);
  }
  for (const SummaryRow& row : summary) {
    double best = std::numeric_limits<double>::infinity();
    int64_t best_index = -1;
    for (int64_t g = 0; g < static_cast<int64_t>(config.grid.size()); ++g) {
      const auto& values = finals.at({row.algorithm, row.s, g});
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      if (best_index < 0 || mean < best) {
        best = mean;
        best_index = g;
      }
    }
    EXPECT_EQ(row.best_grid_index, best_index) << row.algorithm << " " << row.s;
    EXPECT_NEAR(row.mean_final_dist_sq, best, 1e-12 * (1.0 + best));
    EXPECT_EQ(row.seeds, config.seeds);
  }
  fs::remove_all(dir);
}

TEST(ExperimentTest, ValidatesBeforeRunning) {
  const fs::path dir = TempDir("invalid");
  ExperimentConfig config = SmallConfig(dir);
  config.algorithms.clear();
  EXPECT_THROW(RunExperiment(config), ConfigError);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(ExperimentTest, UnwritableOutputDirectory) {
  const fs::path blocker = TempDir("blocker");
  std::ofstream(blocker.string()) << "file";
  ExperimentConfig config = SmallConfig(blocker / "out");
  EXPECT_THROW(RunExperiment(config), IoError);
  fs::remove(blocker);
}

TEST(VerificationTest, SuiteSelection) {
  EXPECT_EQ(SuiteChecks("oracles").size(), 4u);
  EXPECT_EQ(SuiteChecks("identities").size(), 4u);
  EXPECT_EQ(SuiteChecks("convergence").size(), 3u);
  EXPECT_EQ(SuiteChecks("all").size(), 11u);
  EXPECT_THROW(SuiteChecks("everything"), ConfigError);
  CheckResult result{"A3", "prox-oracle", true, "residual=1e-14", 0.25};
  EXPECT_EQ(FormatCheck(result).rfind("A3 PASS prox-oracle", 0), 0u);
}

}  // namespace
}  // namespace fedsaddle
