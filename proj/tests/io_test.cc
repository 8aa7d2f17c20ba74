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


#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "clapmatch/errors.h"
#include "clapmatch/pair_io.h"
#include "clapmatch/report.h"
#include "clapmatch/synthetic_bench.h"

namespace clapmatch {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(PairIoTest, RoundTripWithTruth) {
  SynthConfig c;
  c.seed = 5;
  const GeneratedPair g = GeneratePair(c, 0);
  const std::string text = SerializeGraphPair(g.a, g.b, &g.truth);
  const GraphPair back = ParseGraphPair(text);
  EXPECT_EQ(back.a, g.a);
  EXPECT_EQ(back.b, g.b);
  ASSERT_TRUE(back.truth.has_value());
  EXPECT_EQ(*back.truth, g.truth);
  EXPECT_EQ(SerializeGraphPair(back.a, back.b, &*back.truth), text);
}

TEST(PairIoTest, TruthIsOptional) {
  const GraphPair p = ParseGraphPair(
      R"({"a": {"points": [[0, 0]], "descriptors": [[1, 0]]},
          "b": {"points": [[1, 2], [3, 4]], "descriptors": [[0, 1], [1, 0]]}})");
  EXPECT_EQ(p.a.size(), 1);
  EXPECT_EQ(p.b.size(), 2);
  EXPECT_FALSE(p.truth.has_value());
}

TEST(PairIoTest, Malformed) {
  EXPECT_THROW(ParseGraphPair("{"), ParseError);
  EXPECT_THROW(ParseGraphPair("[]"), ParseError);
  EXPECT_THROW(ParseGraphPair(R"({"a": {"points": [[0, 0]]}})"), ParseError);
  EXPECT_THROW(ParseGraphPair(R"({"a": {"points": [[0]], "descriptors": [[1]]},
                                  "b": {"points": [[0, 0]], "descriptors": [[1]]}})"),
               ParseError);
  // descriptor count differs from point count
  EXPECT_THROW(ParseGraphPair(R"({"a": {"points": [[0, 0]], "descriptors": [[1], [2]]},
                                  "b": {"points": [[0, 0]], "descriptors": [[1]]}})"),
               ParseError);
  const std::string sides = R"("a": {"points": [[0, 0], [1, 1]], "descriptors": [[1], [2]]},
                                "b": {"points": [[0, 0], [1, 1]], "descriptors": [[1], [2]]})";
  EXPECT_THROW(ParseGraphPair("{" + sides + R"(, "truth": [[0, 0], [1, 0]]})"), ParseError);
  EXPECT_THROW(ParseGraphPair("{" + sides + R"(, "truth": [[0, 0]]})"), ParseError);
  EXPECT_THROW(ParseGraphPair("{" + sides + R"(, "truth": [[0, 5], [1, 0]]})"), ParseError);
  EXPECT_NO_THROW(ParseGraphPair("{" + sides + R"(, "truth": [[1, 0], [0, 1]]})"));
}

TEST(PairIoTest, MissingFileIsIoError) {
  EXPECT_THROW(ReadGraphPair("/nonexistent/dir/pair.json"), IoError);
}

BenchReport TwoRecordReport() {
  BenchReport r;
  r.descriptor_model = "test";
  BenchRecord a;
  a.pair_index = 0;
  a.acc = 0.9;
  a.time_ms = 1.25;
  a.outer_iters = 3;
  a.converged = true;
  BenchRecord b = a;
  b.pair_index = 1;
  b.solver = SolverKind::kPgd;
  b.attribute = AttributeKind::kAdjacency;
  b.acc = 1.0 / 3.0;
  b.converged = false;
  r.records = {a, b};
  r.aggregates = Aggregate(r.records);
  return r;
}

TEST(ReportTest, EmptyReportIsHeaderOnly) {
  std::ostringstream out;
  EmitReport(BenchReport(), ReportFormat::kCsv, out);
  EXPECT_EQ(out.str(), std::string(kCsvHeader) + "\n");
}

TEST(ReportTest, TwoRecordCsv) {
  std::ostringstream out;
  EmitReport(TwoRecordReport(), ReportFormat::kCsv, out);
  const auto lines = Lines(out.str());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "pair_index,solver,attribute,acc,time_ms,outer_iters,converged");
  EXPECT_EQ(lines[1], "0,clap,length,0.9,1.25,3,true");
  EXPECT_EQ(lines[2], "1,pgd,adjacency,0.3333333333,1.25,3,false");
}

TEST(ReportTest, JsonRoundTripKeepsAggregates) {
  const BenchReport r = TwoRecordReport();
  std::ostringstream out;
  EmitReport(r, ReportFormat::kJson, out);
  const BenchReport back = ParseJsonReport(out.str());
  EXPECT_EQ(back.descriptor_model, "test");
  EXPECT_EQ(back.timing_scope, "solver-only");
  ASSERT_EQ(back.records.size(), 2u);
  EXPECT_EQ(back.records[1].acc, r.records[1].acc);
  ASSERT_EQ(back.aggregates.size(), r.aggregates.size());
  for (size_t i = 0; i < r.aggregates.size(); ++i) {
    EXPECT_EQ(back.aggregates[i].solver, r.aggregates[i].solver);
    EXPECT_EQ(back.aggregates[i].attribute, r.aggregates[i].attribute);
    EXPECT_EQ(back.aggregates[i].pairs, r.aggregates[i].pairs);
    EXPECT_DOUBLE_EQ(back.aggregates[i].mean_acc_percent, r.aggregates[i].mean_acc_percent);
    EXPECT_DOUBLE_EQ(back.aggregates[i].fps, r.aggregates[i].fps);
  }
  EXPECT_THROW(ParseJsonReport("{}"), ParseError);
}

TEST(ReportTest, UnwritablePathNamesPath) {
  try {
    EmitReport(BenchReport(), ReportFormat::kCsv,
               std::filesystem::path("/nonexistent/dir/out.csv"));
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), "/nonexistent/dir/out.csv");
  }
}

TEST(ReportTest, NumbersKeepSixSignificantDigits) {
  EXPECT_EQ(FormatNumber(0.123456789), "0.123456789");
  EXPECT_EQ(FormatNumber(98.1), "98.1");
  EXPECT_EQ(std::stod(FormatNumber(1.0 / 7.0)), std::stod("0.1428571429"));
}

}  // namespace
}  // namespace clapmatch
