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

#include "clapmatch/baselines.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "clapmatch/errors.h"
#include "clapmatch/hungarian.h"
#include "clapmatch/sinkhorn.h"

namespace clapmatch {

std::string_view ToString(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kFrobenius:
      return "frobenius";
    case ObjectiveKind::kTrace:
      return "trace";
    case ObjectiveKind::kLinearL1:
      return "linear_l1";
  }
  return "unknown";
}

ObjectiveKind ParseObjectiveKind(std::string_view name) {
  if (name == "frobenius") return ObjectiveKind::kFrobenius;
  if (name == "trace") return ObjectiveKind::kTrace;
  if (name == "linear_l1") return ObjectiveKind::kLinearL1;
  throw InvalidInputError("unknown objective kind '" + std::string(name) + "'");
}

StructureInputs StructureInputs::Raw(const MatchProblem& problem) {
  return {problem.d_a().values(), problem.d_b().values(),
          problem.structure().h_a, problem.structure().h_b};
}

StructureInputs StructureInputs::Shifted(const FactoredStructure& structure) {
  return {structure.d_hat_a, structure.d_hat_b, structure.h_a, structure.h_b};
}

namespace {

void CheckDims(ObjectiveKind kind, Eigen::Index n, Eigen::Index m,
               const Eigen::MatrixXd& u, const StructureInputs& s) {
  bool ok = u.rows() == n && u.cols() == m;
  if (kind == ObjectiveKind::kLinearL1) {
    ok = ok && s.h_a.rows() == n && s.h_b.rows() == m;
  } else {
    ok = ok && s.d_a.rows() == n && s.d_a.cols() == n && s.d_b.rows() == m &&
         s.d_b.cols() == m;
  }
  if (!ok) {
    throw InvalidInputError(std::string("evaluate(") +
                            std::string(ToString(kind)) +
                            "): inconsistent dimensions");
  }
}

}  // namespace

double Evaluate(ObjectiveKind kind, const Eigen::MatrixXd& p,
                const Eigen::MatrixXd& u, const StructureInputs& structure,
                double lambda) {
  CheckDims(kind, p.rows(), p.cols(), u, structure);
  const double unary = p.cwiseProduct(u).sum();
  switch (kind) {
    case ObjectiveKind::kFrobenius:
      return unary -
             lambda * (structure.d_a - p * structure.d_b * p.transpose())
                          .squaredNorm();
    case ObjectiveKind::kTrace:
      return unary + lambda * (p.transpose() * structure.d_a.transpose() * p *
                               structure.d_b)
                                  .trace();
    case ObjectiveKind::kLinearL1:
      return unary +
             lambda *
                 (structure.h_a.transpose() * p * structure.h_b).cwiseAbs().sum();
  }
  throw InvalidInputError("unknown objective kind");
}

namespace {

// Depth-first enumeration over injective maps in lexicographic order with
// incremental objective accumulation.
class Enumerator {
 public:
  Enumerator(const Eigen::MatrixXd& u, const StructureInputs& s, double lambda,
             ObjectiveKind kind)
      : u_(u), s_(s), lambda_(lambda), kind_(kind),
        n_(static_cast<int>(u.rows())), m_(static_cast<int>(u.cols())),
        cols_(n_, -1), used_(m_, false) {
    if (kind_ == ObjectiveKind::kLinearL1) {
      levels_.assign(n_ + 1, Eigen::MatrixXd::Zero(s.h_a.cols(), s.h_b.cols()));
    }
  }

  OracleResult Run() {
    Descend(0, 0.0);
    return OracleResult{HardAssignment(best_cols_, m_), best_value_, evaluated_};
  }

 private:
  // Contribution of fixing row i to column c, given rows < i are fixed.
  double PairTerm(int i, int c) const {
    double acc = u_(i, c);
    if (kind_ == ObjectiveKind::kLinearL1) return acc;
    const bool frob = kind_ == ObjectiveKind::kFrobenius;
    for (int j = 0; j <= i; ++j) {
      const int cj = j == i ? c : cols_[j];
      if (frob) {
        const double a = s_.d_a(i, j) - s_.d_b(c, cj);
        const double b = s_.d_a(j, i) - s_.d_b(cj, c);
        acc -= lambda_ * (j == i ? a * a : a * a + b * b);
      } else {
        const double a = s_.d_a(i, j) * s_.d_b(c, cj);
        const double b = s_.d_a(j, i) * s_.d_b(cj, c);
        acc += lambda_ * (j == i ? a : a + b);
      }
    }
    return acc;
  }

  void Descend(int i, double partial) {
    if (i == n_) {
      ++evaluated_;
      double value = partial;
      if (kind_ == ObjectiveKind::kLinearL1) {
        value += lambda_ * levels_[n_].cwiseAbs().sum();
      }
      if (value > best_value_) {
        best_value_ = value;
        best_cols_ = cols_;
      }
      return;
    }
    for (int c = 0; c < m_; ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      cols_[i] = c;
      if (kind_ == ObjectiveKind::kLinearL1) {
        levels_[i + 1].noalias() =
            levels_[i] + s_.h_a.row(i).transpose() * s_.h_b.row(c);
      }
      Descend(i + 1, partial + PairTerm(i, c));
      used_[c] = false;
    }
    cols_[i] = -1;
  }

  const Eigen::MatrixXd& u_;
  const StructureInputs& s_;
  const double lambda_;
  const ObjectiveKind kind_;
  const int n_;
  const int m_;
  std::vector<int> cols_;
  std::vector<bool> used_;
  std::vector<Eigen::MatrixXd> levels_;
  std::vector<int> best_cols_;
  double best_value_ = -std::numeric_limits<double>::infinity();
  std::int64_t evaluated_ = 0;
};

}  // namespace

OracleResult BruteForce(const Eigen::MatrixXd& u, const StructureInputs& structure,
                        double lambda, ObjectiveKind kind) {
  const Eigen::Index n = u.rows();
  const Eigen::Index m = u.cols();
  if (n > kMaxOracleRows || m > kMaxOracleCols) {
    throw SizeError("brute force is limited to " + std::to_string(kMaxOracleRows) +
                    " x " + std::to_string(kMaxOracleCols) + " (got " +
                    std::to_string(n) + " x " + std::to_string(m) + ")");
  }
  if (n > m) throw InvalidInputError("brute force needs rows <= cols");
  if (n == 0) throw InvalidInputError("brute force: empty problem");
  CheckDims(kind, n, m, u, structure);
  if (!u.allFinite()) throw InvalidInputError("brute force: non-finite U");
  return Enumerator(u, structure, lambda, kind).Run();
}

MatchResult PgdSolve(const MatchProblem& problem, const PgdParams& params) {
  if (!(params.lambda >= 0.0) || params.iters < 1 ||
      params.sinkhorn_max_iters < 1 || !(params.sinkhorn_tol > 0.0) ||
      !std::isfinite(params.step)) {
    throw InvalidInputError("invalid projected-gradient parameters");
  }
  const auto start = std::chrono::steady_clock::now();
  const int n = problem.rows();
  const int m = problem.cols();
  if (n > m) throw InvalidInputError("pgd needs rows <= cols");
  if (n == 0) throw InvalidInputError("pgd: empty problem");

  const Eigen::MatrixXd& u = problem.u().values();
  const Eigen::MatrixXd& d_a = problem.d_a().values();
  const Eigen::MatrixXd& d_b = problem.d_b().values();
  const double d_max = problem.structure().d_max;
  const double step = params.step > 0.0
                          ? params.step
                          : 1.0 / (2.0 * params.lambda * d_max * d_max + 1.0);
  const StructureInputs raw{d_a, d_b, Eigen::MatrixXd(), Eigen::MatrixXd()};

  Eigen::MatrixXd padded = Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  MatchResult result{HardAssignment::Identity(0), SoftAssignment(padded, n),
                     {}, 0, 0, true, 0.0};
  for (int t = 0; t < params.iters; ++t) {
    const Eigen::MatrixXd p = padded.topRows(n);
    Eigen::MatrixXd logits = padded.array().log().matrix();
    logits.topRows(n) += step * (u + 2.0 * params.lambda * (d_a * p * d_b));
    // log P already carries the previous potentials, so no warm start.
    SinkhornResult sr = SinkhornLog(logits, 1.0, params.sinkhorn_max_iters,
                                    params.sinkhorn_tol);
    result.sinkhorn_iters_total += sr.iterations;
    result.converged = result.converged && sr.converged;
    ++result.outer_iters;
    padded = sr.coupling.values();
    result.objective_trace.push_back(
        Evaluate(ObjectiveKind::kTrace, padded.topRows(n), u, raw, params.lambda));
  }
  result.soft = SoftAssignment(std::move(padded), n);
  result.hard = Hungarian(result.soft);
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return result;
}

}  // namespace clapmatch
