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

#include "clapmatch/clap_solver.h"

#include <chrono>
#include <cmath>
#include <string>

#include "clapmatch/errors.h"
#include "clapmatch/hungarian.h"

namespace clapmatch {

void SolverParams::Validate() const {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw InvalidInputError("lambda must be a finite value >= 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidInputError("epsilon must be positive");
  }
  if (sinkhorn_max_iters < 1 || outer_max_iters < 1) {
    throw InvalidInputError("iteration caps must be >= 1");
  }
  if (!(sinkhorn_tol > 0.0) || !(outer_tol > 0.0)) {
    throw InvalidInputError("tolerances must be positive");
  }
}

namespace {

EdgeAttributeMatrix SideAttributes(const GraphSide& side, AttributeKind kind,
                                   bool normalize_lengths) {
  if (side.size() < 2) {
    return EdgeAttributeMatrix(Eigen::MatrixXd::Zero(side.size(), side.size()),
                               kind);
  }
  return BuildAttributes(side, kind, normalize_lengths);
}

void CheckShapes(const NodeSimilarity& u, const EdgeAttributeMatrix& d_a,
                 const EdgeAttributeMatrix& d_b) {
  if (u.rows() != d_a.size() || u.cols() != d_b.size()) {
    throw InvalidInputError(
        "problem shape mismatch: U is " + std::to_string(u.rows()) + " x " +
        std::to_string(u.cols()) + " but attribute matrices are " +
        std::to_string(d_a.size()) + " and " + std::to_string(d_b.size()));
  }
}

}  // namespace

MatchProblem::MatchProblem(NodeSimilarity u, EdgeAttributeMatrix d_a,
                           EdgeAttributeMatrix d_b, double eigen_tol)
    : u_((CheckShapes(u, d_a, d_b), std::move(u))),
      d_a_(std::move(d_a)),
      d_b_(std::move(d_b)),
      structure_(PrepareStructure(d_a_, d_b_, eigen_tol)) {}

MatchProblem MatchProblem::FromSides(const GraphSide& a, const GraphSide& b,
                                     AttributeKind kind, bool normalize_lengths,
                                     double similarity_scale) {
  return MatchProblem(ComputeNodeSimilarity(a, b, similarity_scale),
                      SideAttributes(a, kind, normalize_lengths),
                      SideAttributes(b, kind, normalize_lengths));
}

Eigen::MatrixXd SignMatrix(const Eigen::MatrixXd& h_a, const Eigen::MatrixXd& p,
                           const Eigen::MatrixXd& h_b) {
  if (h_a.rows() != p.rows() || h_b.rows() != p.cols()) {
    throw InvalidInputError("sign matrix: inconsistent dimensions");
  }
  const Eigen::MatrixXd x = h_a.transpose() * p * h_b;
  if (x.size() == 0) return x;
  const double scale =
      h_a.cwiseAbs().maxCoeff() * h_b.cwiseAbs().maxCoeff() * p.cwiseAbs().sum();
  const double dead_zone = 1e-12 * scale;
  return x.unaryExpr([dead_zone](double v) {
    if (std::abs(v) <= dead_zone) return 0.0;
    return v > 0.0 ? 1.0 : -1.0;
  });
}

Eigen::MatrixXd ScoreMatrix(const Eigen::MatrixXd& u, const Eigen::MatrixXd& h_a,
                            const Eigen::MatrixXd& s, const Eigen::MatrixXd& h_b,
                            double lambda) {
  if (h_a.rows() != u.rows() || h_b.rows() != u.cols() ||
      s.rows() != h_a.cols() || s.cols() != h_b.cols()) {
    throw InvalidInputError("score matrix: inconsistent dimensions");
  }
  if (lambda == 0.0 || s.size() == 0) return u;
  return u + lambda * (h_a * s * h_b.transpose());
}

double ObjectiveValue(const Eigen::MatrixXd& p, const Eigen::MatrixXd& u,
                      const Eigen::MatrixXd& h_a, const Eigen::MatrixXd& h_b,
                      double lambda, double epsilon) {
  if (p.rows() != u.rows() || p.cols() != u.cols() || h_a.rows() != p.rows() ||
      h_b.rows() != p.cols()) {
    throw InvalidInputError("objective: inconsistent dimensions");
  }
  if (p.size() > 0 && !(p.minCoeff() > 0.0)) {
    throw InvalidInputError(
        "objective: relaxed assignment entries must be strictly positive");
  }
  const double unary = p.cwiseProduct(u).sum();
  const double structure = (h_a.transpose() * p * h_b).cwiseAbs().sum();
  const double entropy = -(p.array() * p.array().log()).sum();
  return unary + lambda * structure + epsilon * entropy;
}

double DiscreteObjectiveValue(const HardAssignment& p, const Eigen::MatrixXd& u,
                              const Eigen::MatrixXd& h_a,
                              const Eigen::MatrixXd& h_b, double lambda) {
  if (p.rows() != u.rows() || p.cols() != u.cols() || h_a.rows() != u.rows() ||
      h_b.rows() != u.cols()) {
    throw InvalidInputError("objective: inconsistent dimensions");
  }
  const Eigen::MatrixXd pm = p.ToMatrix();
  return pm.cwiseProduct(u).sum() +
         lambda * (h_a.transpose() * pm * h_b).cwiseAbs().sum();
}

Eigen::MatrixXd PadToSquare(const Eigen::MatrixXd& scores) {
  if (scores.rows() > scores.cols()) {
    throw InvalidInputError("cannot pad: more rows than columns");
  }
  if (scores.rows() == scores.cols()) return scores;
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(scores.cols(), scores.cols());
  padded.topRows(scores.rows()) = scores;
  return padded;
}

MatchResult Solve(const MatchProblem& problem, const SolverParams& params) {
  params.Validate();
  const auto start = std::chrono::steady_clock::now();
  const int n = problem.rows();
  const int m = problem.cols();
  if (n > m) {
    throw InvalidInputError("solve needs rows <= cols; swap the graph sides");
  }
  if (n == 0) throw InvalidInputError("solve: empty problem");

  const Eigen::MatrixXd& u = problem.u().values();
  const Eigen::MatrixXd& h_a = problem.structure().h_a;
  const Eigen::MatrixXd& h_b = problem.structure().h_b;

  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(n, m, 1.0 / m);
  Eigen::MatrixXd padded_p = Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  Eigen::VectorXd warm_g;
  std::vector<Eigen::MatrixXd> seen_signs;
  MatchResult result{HardAssignment::Identity(0), SoftAssignment(padded_p, n),
                     {}, 0, 0, false, 0.0};
  bool stopped_early = false;
  bool last_sinkhorn_converged = false;

  for (int t = 0; t < params.outer_max_iters; ++t) {
    Eigen::MatrixXd s = SignMatrix(h_a, p, h_b);
    bool repeated = false;
    for (const auto& prev : seen_signs) {
      if (prev == s) {
        repeated = true;
        break;
      }
    }
    if (repeated) {
      stopped_early = true;
      break;
    }
    const Eigen::MatrixXd scores = ScoreMatrix(u, h_a, s, h_b, params.lambda);
    seen_signs.push_back(std::move(s));

    SinkhornResult sr =
        SinkhornLog(PadToSquare(scores), params.epsilon,
                    params.sinkhorn_max_iters, params.sinkhorn_tol, warm_g);
    ++result.outer_iters;
    result.sinkhorn_iters_total += sr.iterations;
    last_sinkhorn_converged = sr.converged;
    warm_g = sr.g;

    Eigen::MatrixXd next = sr.coupling.values().topRows(n);
    const double change = (next - p).cwiseAbs().maxCoeff();
    p = std::move(next);
    padded_p = sr.coupling.values();
    result.objective_trace.push_back(
        ObjectiveValue(p, u, h_a, h_b, params.lambda, params.epsilon));
    if (change <= params.outer_tol) {
      stopped_early = true;
      break;
    }
  }

  result.soft = SoftAssignment(std::move(padded_p), n);
  result.hard = Hungarian(result.soft);
  result.converged = stopped_early && last_sinkhorn_converged;
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return result;
}

}  // namespace clapmatch
