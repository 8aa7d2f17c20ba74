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


// Micro benchmarks of the solver pieces on synthetic pairs.
// Run: ./clapmatch_bench --benchmark_filter=Solve

#include <benchmark/benchmark.h>

#include <random>

#include "clapmatch/baselines.h"
#include "clapmatch/clap_solver.h"
#include "clapmatch/delaunay.h"
#include "clapmatch/hungarian.h"
#include "clapmatch/psd_transform.h"
#include "clapmatch/sinkhorn.h"
#include "clapmatch/synthetic_bench.h"

namespace clapmatch {
namespace {

GeneratedPair Pair(int nodes) {
  SynthConfig config;
  config.nodes = nodes;
  config.seed = 42;
  return GeneratePair(config, 0);
}

Eigen::MatrixXd RandomScores(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  return m;
}

void BM_Solve(benchmark::State& state, AttributeKind kind) {
  const GeneratedPair pair = Pair(static_cast<int>(state.range(0)));
  const MatchProblem problem = MatchProblem::FromSides(pair.a, pair.b, kind);
  for (auto _ : state) {
    MatchResult r = Solve(problem);
    benchmark::DoNotOptimize(r.hard);
  }
}
BENCHMARK_CAPTURE(BM_Solve, length, AttributeKind::kLength)
    ->Arg(10)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Solve, adjacency, AttributeKind::kAdjacency)
    ->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMicrosecond);

void BM_PgdSolve(benchmark::State& state) {
  const GeneratedPair pair = Pair(static_cast<int>(state.range(0)));
  const MatchProblem problem =
      MatchProblem::FromSides(pair.a, pair.b, AttributeKind::kLength);
  for (auto _ : state) {
    MatchResult r = PgdSolve(problem);
    benchmark::DoNotOptimize(r.hard);
  }
}
BENCHMARK(BM_PgdSolve)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PrepareStructure(benchmark::State& state) {
  const GeneratedPair pair = Pair(static_cast<int>(state.range(0)));
  const EdgeAttributeMatrix d_a = BuildLengthAttributes(pair.a.points(), true);
  const EdgeAttributeMatrix d_b = BuildLengthAttributes(pair.b.points(), true);
  for (auto _ : state) {
    FactoredStructure s = PrepareStructure(d_a, d_b);
    benchmark::DoNotOptimize(s.h_a.data());
  }
}
BENCHMARK(BM_PrepareStructure)->Arg(10)->Arg(50)->Arg(200);

void BM_SinkhornLog(benchmark::State& state) {
  const Eigen::MatrixXd scores = RandomScores(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    SinkhornResult r = SinkhornLog(scores, 1.0, 1000, 1e-6);
    benchmark::DoNotOptimize(r.iterations);
  }
}
BENCHMARK(BM_SinkhornLog)->Arg(10)->Arg(50)->Arg(200);

void BM_Hungarian(benchmark::State& state) {
  const Eigen::MatrixXd scores = RandomScores(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) {
    HardAssignment h = MaximizeLinearAssignment(scores);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_Hungarian)->Arg(10)->Arg(50)->Arg(200);

void BM_Delaunay(benchmark::State& state) {
  const GeneratedPair pair = Pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::vector<Edge> e = DelaunayEdges(pair.a.points());
    benchmark::DoNotOptimize(e.data());
  }
}
BENCHMARK(BM_Delaunay)->Arg(10)->Arg(30);

}  // namespace
}  // namespace clapmatch

BENCHMARK_MAIN();
