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


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "clapmatch/baselines.h"
#include "clapmatch/clap_solver.h"
#include "clapmatch/errors.h"
#include "clapmatch/graph_model.h"
#include "clapmatch/pair_io.h"
#include "clapmatch/report.h"
#include "clapmatch/synthetic_bench.h"
#include "json.hpp"

namespace clapmatch::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kAttributeNames{"length", "adjacency",
                                               "inner_product"};

struct ModelOptions {
  std::string attribute = "length";
  bool raw_lengths = false;
  double similarity_scale = 1.0;
  SolverParams solver;
};

struct GenOptions {
  SynthConfig synth;
  std::string out_dir;
};

struct MatchOptions {
  std::string input;
  std::string output;
  std::string solver = "clap";
  ModelOptions model;
  PgdParams pgd;
};

struct BenchCliOptions {
  SynthConfig synth;
  std::vector<std::string> solvers{"clap"};
  std::vector<std::string> attributes{"length"};
  std::string format = "csv";
  std::string out_dir = "bench_results";
  int jobs = 1;
  ModelOptions model;
  PgdParams pgd;
};

struct OracleOptions {
  std::string input;
  int instances = 100;
  SynthConfig synth;
  double gap = 0.01;
  ModelOptions model;
};

void AddConfigOption(CLI::App* app, std::string& path) {
  app->add_option("--config", path, "key = value file; flags override it");
}

void AddSynthOptions(CLI::App* app, SynthConfig& c, bool with_pairs) {
  if (with_pairs) {
    app->add_option("--pairs", c.pairs, "number of pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  app->add_option("--nodes", c.nodes, "nodes per graph")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  app->add_option("--width", c.width, "image width in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--height", c.height, "image height in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--descriptor-dim", c.descriptor_dim, "descriptor dimension")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--noise", c.descriptor_noise, "side-B descriptor noise sigma")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void AddModelOptions(CLI::App* app, ModelOptions& m, bool with_attribute) {
  if (with_attribute) {
    app->add_option("--attr", m.attribute, "edge attribute kind")
        ->check(CLI::IsMember(kAttributeNames))
        ->capture_default_str();
  }
  app->add_flag("--raw-lengths", m.raw_lengths,
                "do not divide lengths by the graph's longest edge");
  app->add_option("--similarity-scale", m.similarity_scale,
                  "global scale of U = scale * A B^T")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  SolverParams& p = m.solver;
  app->add_option("--lambda", p.lambda, "structure weight")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--epsilon", p.epsilon, "entropy weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--sinkhorn-iters", p.sinkhorn_max_iters)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--sinkhorn-tol", p.sinkhorn_tol)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--outer-iters", p.outer_max_iters)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--outer-tol", p.outer_tol)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void AddPgdOptions(CLI::App* app, PgdParams& p) {
  app->add_option("--pgd-step", p.step,
                  "projected-gradient step; 0 picks 1/(2 lambda d_max^2 + 1)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--pgd-iters", p.iters, "projected-gradient iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// Values from the file only fill options the command line left unset.
void ApplyConfigFile(CLI::App* app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open config file");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(in);
  } catch (const CLI::Error& e) {
    throw UsageError(path + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    const bool scoped = item.parents.empty() ||
                        (item.parents.size() == 1 &&
                         item.parents.front() == app->get_name());
    CLI::Option* opt =
        scoped && item.name != "config" && item.name != "help"
            ? app->get_option_no_throw("--" + item.name)
            : nullptr;
    if (opt == nullptr) {
      throw UsageError(path + ": unknown key '" + item.fullname() + "'");
    }
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

PgdParams WithSharedSolverFields(PgdParams pgd, const SolverParams& clap) {
  pgd.lambda = clap.lambda;
  pgd.sinkhorn_max_iters = clap.sinkhorn_max_iters;
  pgd.sinkhorn_tol = clap.sinkhorn_tol;
  return pgd;
}

void ValidateSynth(const SynthConfig& c) {
  try {
    c.Validate();
  } catch (const InvalidInputError& e) {
    throw UsageError(e.what());
  }
}

json PairList(const HardAssignment& p) {
  json out = json::array();
  for (int i = 0; i < p.rows(); ++i) out.push_back({i, p.column_of(i)});
  return out;
}

std::string PairFileName(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "pair_%05d.json", index);
  return buf;
}

void EnsureDirectory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError(dir.string(), "cannot create directory");
  }
}

int RunGen(const GenOptions& o, std::ostream& out) {
  ValidateSynth(o.synth);
  const fs::path dir(o.out_dir);
  EnsureDirectory(dir);
  for (int i = 0; i < o.synth.pairs; ++i) {
    const GeneratedPair pair = GeneratePair(o.synth, i);
    WriteTextFile(dir / PairFileName(i),
                  SerializeGraphPair(pair.a, pair.b, &pair.truth));
  }
  out << "wrote " << o.synth.pairs << " pairs to " << dir.string() << '\n';
  return kExitOk;
}

int RunMatch(const MatchOptions& o, std::ostream& out) {
  const GraphPair pair = ReadGraphPair(o.input);
  const AttributeKind kind = ParseAttributeKind(o.model.attribute);
  const MatchProblem problem =
      MatchProblem::FromSides(pair.a, pair.b, kind, !o.model.raw_lengths,
                              o.model.similarity_scale);
  const MatchResult result =
      o.solver == "pgd"
          ? PgdSolve(problem, WithSharedSolverFields(o.pgd, o.model.solver))
          : Solve(problem, o.model.solver);

  json lines = json::array();
  for (int i = 0; i < result.hard.rows(); ++i) {
    const int j = result.hard.column_of(i);
    lines.push_back({{"a", {pair.a.points()(i, 0), pair.a.points()(i, 1)}},
                     {"b", {pair.b.points()(j, 0), pair.b.points()(j, 1)}}});
  }
  json doc{{"solver", o.solver},
           {"attribute", ToString(kind)},
           {"rows", problem.rows()},
           {"cols", problem.cols()},
           {"assignment", PairList(result.hard)},
           {"objective_trace", result.objective_trace},
           {"outer_iters", result.outer_iters},
           {"sinkhorn_iters_total", result.sinkhorn_iters_total},
           {"converged", result.converged},
           {"time_ms", result.wall_time_ms},
           {"match_lines", std::move(lines)}};
  if (pair.truth) doc["acc"] = Accuracy(result.hard, *pair.truth);

  const std::string text = doc.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    WriteTextFile(o.output, text);
  }
  return kExitOk;
}

int RunBench(const BenchCliOptions& o, std::ostream& out) {
  ValidateSynth(o.synth);
  BenchOptions options;
  options.solvers.clear();
  options.attributes.clear();
  for (const auto& s : o.solvers) {
    const SolverKind kind = ParseSolverKind(s);
    if (std::find(options.solvers.begin(), options.solvers.end(), kind) ==
        options.solvers.end()) {
      options.solvers.push_back(kind);
    }
  }
  for (const auto& a : o.attributes) {
    const AttributeKind kind = ParseAttributeKind(a);
    if (std::find(options.attributes.begin(), options.attributes.end(), kind) ==
        options.attributes.end()) {
      options.attributes.push_back(kind);
    }
  }
  options.clap = o.model.solver;
  options.pgd = WithSharedSolverFields(o.pgd, o.model.solver);
  options.normalize_lengths = !o.model.raw_lengths;
  options.similarity_scale = o.model.similarity_scale;
  options.jobs = o.jobs;

  const ReportFormat format = ParseReportFormat(o.format);
  const std::string ext = o.format;
  const fs::path dir(o.out_dir);
  EnsureDirectory(dir);

  const BenchReport report = RunBenchmark(o.synth, options);
  for (SolverKind s : options.solvers) {
    for (AttributeKind a : options.attributes) {
      BenchReport part;
      part.descriptor_model = report.descriptor_model;
      part.timing_scope = report.timing_scope;
      for (const auto& r : report.records) {
        if (r.solver == s && r.attribute == a) part.records.push_back(r);
      }
      part.aggregates = Aggregate(part.records);
      EmitReport(part, format,
                 dir / (std::string(ToString(s)) + "_" + std::string(ToString(a)) +
                        "." + ext));
    }
  }
  const fs::path agg_path = dir / ("aggregates." + ext);
  if (format == ReportFormat::kCsv) {
    std::ostringstream agg;
    EmitAggregatesCsv(report, agg);
    WriteTextFile(agg_path, agg.str());
  } else {
    BenchReport summary;
    summary.descriptor_model = report.descriptor_model;
    summary.timing_scope = report.timing_scope;
    summary.aggregates = report.aggregates;
    EmitReport(summary, format, agg_path);
  }

  out << "# descriptors: " << report.descriptor_model
      << "; timing: " << report.timing_scope << '\n';
  EmitAggregatesCsv(report, out);
  return kExitOk;
}

double RelativeGap(double optimum, double value) {
  const double diff = std::max(0.0, optimum - value);
  const double denom = std::abs(optimum);
  return denom > 0.0 ? diff / denom : diff;
}

int RunOracle(const OracleOptions& o, std::ostream& out) {
  const AttributeKind kind = ParseAttributeKind(o.model.attribute);
  const double lambda = o.model.solver.lambda;

  struct Instance {
    GraphSide a;
    GraphSide b;
    std::optional<HardAssignment> truth;
  };
  std::vector<Instance> instances;
  if (!o.input.empty()) {
    GraphPair pair = ReadGraphPair(o.input);
    instances.push_back({std::move(pair.a), std::move(pair.b), std::move(pair.truth)});
  } else {
    ValidateSynth(o.synth);
    if (o.synth.nodes > kMaxOracleRows) {
      throw UsageError("oracle supports at most " + std::to_string(kMaxOracleRows) +
                       " nodes");
    }
    for (int i = 0; i < o.instances; ++i) {
      GeneratedPair g = GeneratePair(o.synth, i);
      instances.push_back({std::move(g.a), std::move(g.b), std::move(g.truth)});
    }
  }

  double gap_sum = 0.0, gap_max = 0.0;
  for (size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    const MatchProblem problem = MatchProblem::FromSides(
        inst.a, inst.b, kind, !o.model.raw_lengths, o.model.similarity_scale);
    const StructureInputs shifted = StructureInputs::Shifted(problem.structure());
    const OracleResult best = BruteForce(problem.u().values(), shifted, lambda,
                                         ObjectiveKind::kLinearL1);
    const MatchResult clap = Solve(problem, o.model.solver);
    // Both sides through the same evaluator so equal assignments give gap 0.
    const double optimum = Evaluate(ObjectiveKind::kLinearL1, best.best.ToMatrix(),
                                    problem.u().values(), shifted, lambda);
    const double value = Evaluate(ObjectiveKind::kLinearL1, clap.hard.ToMatrix(),
                                  problem.u().values(), shifted, lambda);
    const double gap = RelativeGap(optimum, value);
    gap_sum += gap;
    gap_max = std::max(gap_max, gap);
    out << "instance " << i << " oracle=" << FormatNumber(optimum)
        << " clap=" << FormatNumber(value) << " gap=" << FormatNumber(gap);
    if (inst.truth) {
      out << " acc_oracle=" << FormatNumber(Accuracy(best.best, *inst.truth))
          << " acc_clap=" << FormatNumber(Accuracy(clap.hard, *inst.truth));
    }
    out << '\n';
  }
  const double gap_mean = gap_sum / static_cast<double>(instances.size());
  const bool ok = gap_max <= o.gap;
  out << "instances=" << instances.size() << " mean_gap=" << FormatNumber(gap_mean)
      << " max_gap=" << FormatNumber(gap_max) << " threshold=" << FormatNumber(o.gap)
      << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitOk : kExitGap;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Graph matching with a concave linear QAP approximation",
               "clapmatch");
  app.require_subcommand(1);
  app.set_version_flag("--version", "clapmatch 0.1.0");

  GenOptions gen;
  std::string gen_config;
  CLI::App* gen_cmd = app.add_subcommand("gen", "write synthetic graph-pair JSON files");
  AddSynthOptions(gen_cmd, gen.synth, true);
  gen_cmd->add_option("--out", gen.out_dir, "output directory")->required();
  AddConfigOption(gen_cmd, gen_config);

  MatchOptions match;
  std::string match_config;
  CLI::App* match_cmd = app.add_subcommand("match", "solve one graph pair");
  match_cmd->add_option("input", match.input, "graph-pair JSON file")->required();
  match_cmd->add_option("--out", match.output, "write the result here, not stdout");
  match_cmd->add_option("--solver", match.solver, "clap or pgd")
      ->check(CLI::IsMember({"clap", "pgd"}))
      ->capture_default_str();
  AddModelOptions(match_cmd, match.model, true);
  AddPgdOptions(match_cmd, match.pgd);
  AddConfigOption(match_cmd, match_config);

  BenchCliOptions bench;
  std::string bench_config;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run the synthetic benchmark");
  AddSynthOptions(bench_cmd, bench.synth, true);
  bench_cmd->add_option("--solvers", bench.solvers, "comma list of clap, pgd")
      ->delimiter(',')
      ->check(CLI::IsMember({"clap", "pgd"}))
      ->capture_default_str();
  bench_cmd->add_option("--attrs", bench.attributes, "comma list of attribute kinds")
      ->delimiter(',')
      ->check(CLI::IsMember(kAttributeNames))
      ->capture_default_str();
  bench_cmd->add_option("--format", bench.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out_dir, "output directory")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddModelOptions(bench_cmd, bench.model, false);
  AddPgdOptions(bench_cmd, bench.pgd);
  AddConfigOption(bench_cmd, bench_config);

  OracleOptions oracle;
  oracle.synth.nodes = 6;
  std::string oracle_config;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "compare CLAP with exhaustive enumeration");
  oracle_cmd->add_option("--input", oracle.input,
                         "graph-pair JSON file; default is synthetic instances");
  oracle_cmd->add_option("--instances", oracle.instances, "synthetic instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  AddSynthOptions(oracle_cmd, oracle.synth, false);
  oracle_cmd->add_option("--gap", oracle.gap, "largest accepted relative gap")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  AddModelOptions(oracle_cmd, oracle.model, true);
  AddConfigOption(oracle_cmd, oracle_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    try {
      if (*gen_cmd) {
        if (!gen_config.empty()) ApplyConfigFile(gen_cmd, gen_config);
        return RunGen(gen, out);
      }
      if (*match_cmd) {
        if (!match_config.empty()) ApplyConfigFile(match_cmd, match_config);
        return RunMatch(match, out);
      }
      if (*bench_cmd) {
        if (!bench_config.empty()) ApplyConfigFile(bench_cmd, bench_config);
        return RunBench(bench, out);
      }
      if (!oracle_config.empty()) ApplyConfigFile(oracle_cmd, oracle_config);
      return RunOracle(oracle, out);
    } catch (const CLI::Error& e) {
      throw UsageError(e.what());
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace clapmatch::cli
