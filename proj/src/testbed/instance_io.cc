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

#include <fstream>
#include <sstream>

#include "fedsaddle/core/errors.h"
#include "fedsaddle/testbed/testbed.h"
#include "json.hpp"

namespace fedsaddle::testbed {
namespace {

constexpr const char* kFormat = "fedsaddle-testbed";
constexpr int kVersion = 1;

nlohmann::json VectorsToJson(const std::vector<Eigen::VectorXd>& vectors) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vectors) {
    out.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  }
  return out;
}

std::vector<Eigen::VectorXd> VectorsFromJson(const nlohmann::json& j, int n,
                                             int d, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw ConfigError(std::string("field '") + field + "' must hold n rows");
  }
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  for (const auto& row : j) {
    const auto values = row.get<std::vector<double>>();
    if (static_cast<int>(values.size()) != d) {
      throw ConfigError(std::string("field '") + field +
                        "' rows must have d entries");
    }
    out.emplace_back(Eigen::Map<const Eigen::VectorXd>(values.data(), d));
  }
  return out;
}

}  // namespace

std::string InstanceToJson(const TestbedInstance& instance) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["seed"] = instance.seed();
  j["s"] = instance.s();
  j["d"] = instance.dim();
  j["n"] = instance.num_clients();
  j["lambda"] = instance.lambda();
  j["centered"] = instance.centered();
  j["a"] = VectorsToJson(instance.a());
  j["b"] = VectorsToJson(instance.b());
  return j.dump(1);
}

TestbedInstance InstanceFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != kFormat) {
      throw ConfigError("not a testbed instance file");
    }
    if (j.at("version").get<int>() != kVersion) {
      throw ConfigError("unsupported instance file version");
    }
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    return TestbedInstance(VectorsFromJson(j.at("a"), n, d, "a"),
                           VectorsFromJson(j.at("b"), n, d, "b"),
                           j.at("lambda").get<double>(), j.at("s").get<double>(),
                           j.at("seed").get<uint64_t>(),
                           j.value("centered", false));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed instance file: ") + e.what());
  }
}

void SaveInstance(const TestbedInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << InstanceToJson(instance) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

TestbedInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return InstanceFromJson(buffer.str());
}

}  // namespace fedsaddle::testbed
