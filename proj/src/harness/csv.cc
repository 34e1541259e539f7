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

#include "fedsaddle/harness/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <system_error>

#include "fedsaddle/core/errors.h"

namespace fedsaddle {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <typename Int>
Int ParseInt(std::string_view text) {
  Int value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError("malformed integer field '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
std::string FormatInt(Int value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::optional<double> ParseOptionalDouble(std::string_view text) {
  if (text.empty()) return std::nullopt;
  return ParseDouble(text);
}

std::optional<int64_t> ParseOptionalInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  return ParseInt<int64_t>(text);
}

void AppendOptional(std::string& line, const std::optional<double>& value) {
  line += ',';
  if (value) line += FormatDouble(*value);
}

// Reads the header line and returns false on an empty stream.
bool ExpectHeader(std::istream& in, std::string_view header) {
  std::string line;
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) {
    throw ConfigError("unexpected CSV header '" + line + "'");
  }
  return true;
}

template <typename Row, typename ParseRow>
std::vector<Row> ReadRows(std::istream& in, std::string_view header,
                          size_t columns, ParseRow parse_row) {
  std::vector<Row> rows;
  if (!ExpectHeader(in, header)) return rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != columns) {
      throw ConfigError("CSV row has " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(columns));
    }
    rows.push_back(parse_row(fields));
  }
  return rows;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

void CloseChecked(std::ofstream& out, const std::string& path) {
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(std::string_view text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

void WriteTraceCsv(std::ostream& out, std::span<const TraceRow> rows,
                   bool header) {
  if (header) out << kTraceCsvHeader << '\n';
  std::string line;
  for (const TraceRow& row : rows) {
    line = row.algorithm;
    line += ',' + FormatDouble(row.s);
    line += ',' + FormatInt(row.seed);
    line += ',' + FormatDouble(row.gamma);
    line += ',' + FormatInt(row.k);
    line += ',' + FormatInt(row.comm_rounds);
    AppendOptional(line, row.dist_sq);
    AppendOptional(line, row.gap);
    AppendOptional(line, row.drift);
    AppendOptional(line, row.cv_error);
    line += ',';
    if (row.meta_t) line += FormatInt(*row.meta_t);
    out << line << '\n';
  }
}

std::vector<TraceRow> ReadTraceCsv(std::istream& in) {
  return ReadRows<TraceRow>(
      in, kTraceCsvHeader, 11, [](const std::vector<std::string_view>& f) {
        TraceRow row;
        row.algorithm = std::string(f[0]);
        row.s = ParseDouble(f[1]);
        row.seed = ParseInt<uint64_t>(f[2]);
        row.gamma = ParseDouble(f[3]);
        row.k = ParseInt<int64_t>(f[4]);
        row.comm_rounds = ParseInt<int64_t>(f[5]);
        row.dist_sq = ParseOptionalDouble(f[6]);
        row.gap = ParseOptionalDouble(f[7]);
        row.drift = ParseOptionalDouble(f[8]);
        row.cv_error = ParseOptionalDouble(f[9]);
        row.meta_t = ParseOptionalInt(f[10]);
        return row;
      });
}

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << kSummaryCsvHeader << '\n';
  for (const SummaryRow& row : rows) {
    out << row.algorithm << ',' << FormatDouble(row.s) << ','
        << FormatDouble(row.best_gamma) << ',' << FormatInt(row.best_grid_index)
        << ',' << FormatDouble(row.mean_final_dist_sq) << ','
        << FormatDouble(row.mean_final_gap) << ',' << FormatInt(row.seeds)
        << ',' << FormatInt(row.comm_rounds) << '\n';
  }
}

std::vector<SummaryRow> ReadSummaryCsv(std::istream& in) {
  return ReadRows<SummaryRow>(
      in, kSummaryCsvHeader, 8, [](const std::vector<std::string_view>& f) {
        SummaryRow row;
        row.algorithm = std::string(f[0]);
        row.s = ParseDouble(f[1]);
        row.best_gamma = ParseDouble(f[2]);
        row.best_grid_index = ParseInt<int64_t>(f[3]);
        row.mean_final_dist_sq = ParseDouble(f[4]);
        row.mean_final_gap = ParseDouble(f[5]);
        row.seeds = ParseInt<int64_t>(f[6]);
        row.comm_rounds = ParseInt<int64_t>(f[7]);
        return row;
      });
}

void WriteTraceCsvFile(const std::string& path,
                       std::span<const TraceRow> rows) {
  std::ofstream out = OpenForWrite(path);
  WriteTraceCsv(out, rows);
  CloseChecked(out, path);
}

std::vector<TraceRow> ReadTraceCsvFile(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadTraceCsv(in);
}

void WriteSummaryCsvFile(const std::string& path,
                         std::span<const SummaryRow> rows) {
  std::ofstream out = OpenForWrite(path);
  WriteSummaryCsv(out, rows);
  CloseChecked(out, path);
}

std::vector<SummaryRow> ReadSummaryCsvFile(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadSummaryCsv(in);
}

}  // namespace fedsaddle
