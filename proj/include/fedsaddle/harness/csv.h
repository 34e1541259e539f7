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

#ifndef FEDSADDLE_HARNESS_CSV_H_
#define FEDSADDLE_HARNESS_CSV_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fedsaddle/metrics/metrics.h"

namespace fedsaddle {

inline constexpr std::string_view kTraceCsvHeader =
    "algorithm,s,seed,gamma,k,comm_rounds,dist_sq,gap,drift,cv_error,meta_t";

inline constexpr std::string_view kSummaryCsvHeader =
    "algorithm,s,best_gamma,best_grid_index,mean_final_dist_sq,"
    "mean_final_gap,seeds,comm_rounds";

// Per (algorithm, s) line of a sweep summary.
struct SummaryRow {
  std::string algorithm;
  double s = 0.0;
  double best_gamma = 0.0;
  int64_t best_grid_index = 0;
  // Minimum over the grid of the seed-averaged final dist_sq; runs that
  // diverged count as +inf.
  double mean_final_dist_sq = 0.0;
  double mean_final_gap = 0.0;  // at the best grid entry
  int64_t seeds = 0;
  int64_t comm_rounds = 0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);
// Accepts everything FormatDouble produces, including inf and nan.
double ParseDouble(std::string_view text);

void WriteTraceCsv(std::ostream& out, std::span<const TraceRow> rows,
                   bool header = true);
std::vector<TraceRow> ReadTraceCsv(std::istream& in);

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows);
std::vector<SummaryRow> ReadSummaryCsv(std::istream& in);

// File wrappers; IoError when the file cannot be opened or written.
void WriteTraceCsvFile(const std::string& path,
                       std::span<const TraceRow> rows);
std::vector<TraceRow> ReadTraceCsvFile(const std::string& path);
void WriteSummaryCsvFile(const std::string& path,
                         std::span<const SummaryRow> rows);
std::vector<SummaryRow> ReadSummaryCsvFile(const std::string& path);

}  // namespace fedsaddle

#endif  // FEDSADDLE_HARNESS_CSV_H_
