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

#include "clapmatch/report.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "clapmatch/errors.h"
#include "json.hpp"

namespace clapmatch {

using nlohmann::json;

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw InvalidInputError("unknown report format '" + std::string(name) + "'");
}

std::string FormatNumber(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

namespace {

std::string AggregateKey(const BenchAggregate& a) {
  return std::string(ToString(a.solver)) + "/" + std::string(ToString(a.attribute));
}

json ToJson(const BenchReport& report) {
  json records = json::array();
  for (const auto& r : report.records) {
    json rec{{"pair_index", r.pair_index},
             {"solver", ToString(r.solver)},
             {"attribute", ToString(r.attribute)},
             {"acc", r.acc},
             {"time_ms", r.time_ms},
             {"outer_iters", r.outer_iters},
             {"converged", r.converged}};
    if (r.failed) {
      rec["failed"] = true;
      rec["error"] = r.error;
    }
    records.push_back(std::move(rec));
  }
  json aggregates = json::object();
  for (const auto& a : report.aggregates) {
    aggregates[AggregateKey(a)] = json{{"solver", ToString(a.solver)},
                                       {"attribute", ToString(a.attribute)},
                                       {"pairs", a.pairs},
                                       {"failures", a.failures},
                                       {"mean_acc_percent", a.mean_acc_percent},
                                       {"mean_time_ms", a.mean_time_ms},
                                       {"fps", a.fps}};
  }
  return json{{"descriptor_model", report.descriptor_model},
              {"timing_scope", report.timing_scope},
              {"records", std::move(records)},
              {"aggregates", std::move(aggregates)}};
}

}  // namespace

void EmitReport(const BenchReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::kJson) {
    out << ToJson(report).dump(2) << '\n';
    return;
  }
  out << kCsvHeader << '\n';
  for (const auto& r : report.records) {
    out << r.pair_index << ',' << ToString(r.solver) << ','
        << ToString(r.attribute) << ',' << FormatNumber(r.acc) << ','
        << FormatNumber(r.time_ms) << ',' << r.outer_iters << ','
        << (r.converged ? "true" : "false") << '\n';
  }
}

void EmitReport(const BenchReport& report, ReportFormat format,
                const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  EmitReport(report, format, out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

void EmitAggregatesCsv(const BenchReport& report, std::ostream& out) {
  out << "solver,attribute,pairs,failures,mean_acc_percent,mean_time_ms,fps\n";
  for (const auto& a : report.aggregates) {
    out << ToString(a.solver) << ',' << ToString(a.attribute) << ',' << a.pairs
        << ',' << a.failures << ',' << FormatNumber(a.mean_acc_percent) << ','
        << FormatNumber(a.mean_time_ms) << ',' << FormatNumber(a.fps) << '\n';
  }
}

BenchReport ParseJsonReport(std::string_view json_text) {
  BenchReport report;
  try {
    const json doc = json::parse(json_text.begin(), json_text.end());
    report.descriptor_model = doc.at("descriptor_model").get<std::string>();
    report.timing_scope = doc.at("timing_scope").get<std::string>();
    for (const json& r : doc.at("records")) {
      BenchRecord rec;
      rec.pair_index = r.at("pair_index").get<int>();
      rec.solver = ParseSolverKind(r.at("solver").get<std::string>());
      rec.attribute = ParseAttributeKind(r.at("attribute").get<std::string>());
      rec.acc = r.at("acc").get<double>();
      rec.time_ms = r.at("time_ms").get<double>();
      rec.outer_iters = r.at("outer_iters").get<int>();
      rec.converged = r.at("converged").get<bool>();
      rec.failed = r.value("failed", false);
      rec.error = r.value("error", std::string());
      report.records.push_back(std::move(rec));
    }
    for (const auto& [key, a] : doc.at("aggregates").items()) {
      BenchAggregate agg;
      agg.solver = ParseSolverKind(a.at("solver").get<std::string>());
      agg.attribute = ParseAttributeKind(a.at("attribute").get<std::string>());
      agg.pairs = a.at("pairs").get<int>();
      agg.failures = a.at("failures").get<int>();
      agg.mean_acc_percent = a.at("mean_acc_percent").get<double>();
      agg.mean_time_ms = a.at("mean_time_ms").get<double>();
      agg.fps = a.at("fps").get<double>();
      report.aggregates.push_back(agg);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  } catch (const InvalidInputError& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  return report;
}

}  // namespace clapmatch
