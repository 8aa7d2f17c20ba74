// Copyright 2026 The clapmatch Authors
//
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

// CSV / JSON serialization of benchmark reports.
//
// CSV: header `pair_index,solver,attribute,acc,time_ms,outer_iters,converged`
// then one line per record. JSON: {"descriptor_model", "timing_scope",
// "records": [...], "aggregates": {"<solver>/<attribute>": {...}}}.

#ifndef CLAPMATCH_REPORT_H_
#define CLAPMATCH_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "clapmatch/synthetic_bench.h"

namespace clapmatch {

enum class ReportFormat { kCsv, kJson };

// Accepts "csv" and "json". Throws InvalidInputError.
ReportFormat ParseReportFormat(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "pair_index,solver,attribute,acc,time_ms,outer_iters,converged";

void EmitReport(const BenchReport& report, ReportFormat format, std::ostream& out);
// Throws IoError naming the path.
void EmitReport(const BenchReport& report, ReportFormat format,
                const std::filesystem::path& path);

// solver,attribute,pairs,failures,mean_acc_percent,mean_time_ms,fps
void EmitAggregatesCsv(const BenchReport& report, std::ostream& out);

// Inverse of the JSON emitter. Throws ParseError.
BenchReport ParseJsonReport(std::string_view json_text);

// Decimal text with 10 significant digits.
std::string FormatNumber(double value);

}  // namespace clapmatch

#endif  // CLAPMATCH_REPORT_H_
