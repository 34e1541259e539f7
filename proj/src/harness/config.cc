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

#include "fedsaddle/harness/config.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/harness/csv.h"

namespace fedsaddle {
namespace {

std::string_view Trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view text) {
  std::vector<std::string_view> items;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view item = Trim(text.substr(start, end - start));
    if (item.empty()) throw ConfigError("empty list entry");
    items.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

double ToDouble(std::string_view text) {
  const double value = ParseDouble(text);
  if (!std::isfinite(value)) {
    throw ConfigError("non-finite value '" + std::string(text) + "'");
  }
  return value;
}

int64_t ToInt(std::string_view text) {
  int64_t value = 0;
  std::istringstream in{std::string(text)};
  if (!(in >> value) || !in.eof()) {
    throw ConfigError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

bool ToBool(std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("expected a boolean, got '" + std::string(text) + "'");
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"algorithms",
       [](ExperimentConfig& c, std::string_view v) {
         c.algorithms.clear();
         for (auto name : SplitList(v)) {
           c.algorithms.push_back(ParseAlgorithm(name));
         }
       }},
      {"s", [](ExperimentConfig& c,
               std::string_view v) { c.s_values = ParseDoubleList(v); }},
      {"d", [](ExperimentConfig& c,
               std::string_view v) { c.d = static_cast<int>(ToInt(v)); }},
      {"n", [](ExperimentConfig& c,
               std::string_view v) { c.n = static_cast<int>(ToInt(v)); }},
      {"lambda",
       [](ExperimentConfig& c, std::string_view v) { c.lambda = ToDouble(v); }},
      {"p",
       [](ExperimentConfig& c, std::string_view v) {
         c.sync.probabilistic = true;
         c.sync.p = ToDouble(v);
       }},
      {"tau",
       [](ExperimentConfig& c, std::string_view v) {
         c.sync.probabilistic = false;
         c.sync.tau = static_cast<int>(ToInt(v));
       }},
      {"grid", [](ExperimentConfig& c,
                  std::string_view v) { c.grid = ParseDoubleList(v); }},
      {"scale_grid", [](ExperimentConfig& c,
                        std::string_view v) { c.scale_grid = ToBool(v); }},
      {"fedavg_decaying",
       [](ExperimentConfig& c, std::string_view v) {
         c.fedavg_decaying = ToBool(v);
       }},
      {"theta",
       [](ExperimentConfig& c, std::string_view v) { c.theta = ToDouble(v); }},
      {"catalyst_stop",
       [](ExperimentConfig& c, std::string_view v) {
         c.catalyst_stop = ParseInnerStop(v);
       }},
      {"catalyst_decrease",
       [](ExperimentConfig& c, std::string_view v) {
         c.catalyst_decrease = ToDouble(v);
       }},
      {"catalyst_max_inner_rounds",
       [](ExperimentConfig& c, std::string_view v) {
         c.catalyst_max_inner_rounds = ToInt(v);
       }},
      {"catalyst_fixed_rounds",
       [](ExperimentConfig& c, std::string_view v) {
         c.catalyst_fixed_rounds = ToInt(v);
       }},
      {"budget",
       [](ExperimentConfig& c, std::string_view v) { c.budget = ToInt(v); }},
      {"seeds", [](ExperimentConfig& c,
                   std::string_view v) { c.seeds = static_cast<int>(ToInt(v)); }},
      {"master_seed",
       [](ExperimentConfig& c, std::string_view v) {
         const int64_t seed = ToInt(v);
         if (seed < 0) throw ConfigError("master_seed must be non-negative");
         c.master_seed = static_cast<uint64_t>(seed);
       }},
      {"sigma",
       [](ExperimentConfig& c, std::string_view v) { c.sigma = ToDouble(v); }},
      {"init", [](ExperimentConfig& c,
                  std::string_view v) { c.init = std::string(v); }},
      {"output", [](ExperimentConfig& c,
                    std::string_view v) { c.output_dir = std::string(v); }},
      {"record_every",
       [](ExperimentConfig& c, std::string_view v) {
         c.record_every = ToInt(v);
       }},
      {"jobs", [](ExperimentConfig& c,
                  std::string_view v) { c.jobs = static_cast<int>(ToInt(v)); }},
  };
  return *setters;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (algorithms.empty()) throw ConfigError("no algorithms selected");
  if (s_values.empty()) throw ConfigError("no s values");
  for (double s : s_values) {
    if (!(s >= 0.0)) throw ConfigError("s values must be non-negative");
  }
  if (d < 1 || n < 1) throw ConfigError("d and n must be positive");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (sync.probabilistic) {
    if (!(sync.p > 0.0 && sync.p <= 1.0)) {
      throw ConfigError("p must lie in (0, 1]");
    }
  } else if (sync.tau < 1) {
    throw ConfigError("tau must be a positive integer");
  }
  if (grid.empty()) throw ConfigError("empty stepsize grid");
  for (double gamma : grid) {
    if (!(gamma > 0.0)) throw ConfigError("stepsize grid entries must be > 0");
  }
  if (!(theta >= 0.0)) throw ConfigError("theta must be non-negative");
  if (!(catalyst_decrease > 0.0 && catalyst_decrease < 1.0)) {
    throw ConfigError("catalyst_decrease must lie in (0, 1)");
  }
  if (catalyst_max_inner_rounds < 1 || catalyst_fixed_rounds < 1) {
    throw ConfigError("catalyst inner round limits must be positive");
  }
  if (budget < 1) throw ConfigError("budget must be at least 1");
  if (seeds < 1) throw ConfigError("at least one seed is required");
  if (!(sigma >= 0.0)) throw ConfigError("sigma must be non-negative");
  if (record_every < 0) throw ConfigError("record_every must be >= 0");
  if (jobs < 1) throw ConfigError("jobs must be positive");
  InitialPoint(init, d);
}

ExperimentConfig ParseConfigText(std::string_view text,
                                 ExperimentConfig base) {
  bool saw_p = false;
  bool saw_tau = false;
  int line_number = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": expected key = value");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto& setters = Setters();
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError("line " + std::to_string(line_number) +
                        ": unknown key '" + std::string(key) + "'");
    }
    saw_p |= key == "p";
    saw_tau |= key == "tau";
    try {
      it->second(base, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  if (saw_p && saw_tau) throw ConfigError("set either p or tau, not both");
  return base;
}

ExperimentConfig LoadConfigFile(const std::string& path,
                                ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ParseConfigText(text.str(), std::move(base));
}

SaddlePoint InitialPoint(std::string_view spec, int d) {
  if (spec == "ones") return SaddlePoint::Constant(d, d, 1.0);
  if (spec == "zeros") return SaddlePoint(d, d);
  if (spec.starts_with("const:")) {
    return SaddlePoint::Constant(d, d, ToDouble(spec.substr(6)));
  }
  throw ConfigError("unknown initial point '" + std::string(spec) + "'");
}

std::vector<double> ParseDoubleList(std::string_view text) {
  std::vector<double> values;
  for (auto item : SplitList(text)) values.push_back(ToDouble(item));
  return values;
}

std::vector<double> SRange(double s_min, double s_max, double s_step) {
  if (!(s_step > 0.0)) throw ConfigError("s step must be positive");
  if (!(s_min >= 0.0) || !(s_max >= s_min)) {
    throw ConfigError("need 0 <= s_min <= s_max");
  }
  std::vector<double> values;
  const auto count =
      static_cast<int64_t>(std::floor((s_max - s_min) / s_step + 1e-9));
  for (int64_t i = 0; i <= count; ++i) values.push_back(s_min + i * s_step);
  return values;
}

CatalystConfig::InnerStop ParseInnerStop(std::string_view name) {
  using InnerStop = CatalystConfig::InnerStop;
  if (name == "decrease") return InnerStop::kObjectiveDecrease;
  if (name == "prox") return InnerStop::kProxDistance;
  if (name == "fixed") return InnerStop::kFixedRounds;
  throw ConfigError("unknown catalyst stop rule '" + std::string(name) + "'");
}

}  // namespace fedsaddle
