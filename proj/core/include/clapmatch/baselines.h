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

// Reference objectives, an exhaustive oracle and a projected-gradient
// quadratic baseline.

#ifndef CLAPMATCH_BASELINES_H_
#define CLAPMATCH_BASELINES_H_

#include <Eigen/Dense>

#include <cstdint>
#include <string_view>

#include "clapmatch/clap_solver.h"
#include "clapmatch/graph_model.h"

namespace clapmatch {

enum class ObjectiveKind {
  kFrobenius,  // <U,P> - lambda * ||D_A - P D_B P^T||_F^2
  kTrace,      // <U,P> + lambda * tr(P^T D_A^T P D_B)
  kLinearL1,   // <U,P> + lambda * sum |H_A^T P H_B|
};

std::string_view ToString(ObjectiveKind kind);
ObjectiveKind ParseObjectiveKind(std::string_view name);

// Structure matrices an objective reads: D for the quadratic kinds, H for the
// L1 kind. Callers pick raw or shifted D.
struct StructureInputs {
  Eigen::MatrixXd d_a;
  Eigen::MatrixXd d_b;
  Eigen::MatrixXd h_a;
  Eigen::MatrixXd h_b;

  // Raw attribute matrices plus the factors of their shifted versions.
  static StructureInputs Raw(const MatchProblem& problem);
  // Shifted matrices and their factors.
  static StructureInputs Shifted(const FactoredStructure& structure);
};

// Objective of `kind` at an n x m assignment (hard or relaxed).
// Throws InvalidInputError on dimension mismatch.
double Evaluate(ObjectiveKind kind, const Eigen::MatrixXd& p,
                const Eigen::MatrixXd& u, const StructureInputs& structure,
                double lambda);

inline constexpr int kMaxOracleRows = 8;
inline constexpr int kMaxOracleCols = 9;

struct OracleResult {
  HardAssignment best;
  double value = 0.0;
  std::int64_t evaluated = 0;
};

// Global maximizer over all injective assignments. Ties go to the
// lexicographically smallest column sequence. Throws SizeError above
// kMaxOracleRows x kMaxOracleCols and InvalidInputError for rows > cols.
OracleResult BruteForce(const Eigen::MatrixXd& u, const StructureInputs& structure,
                        double lambda, ObjectiveKind kind);

struct PgdParams {
  double lambda = 0.1;
  // Non-positive selects 1 / (2 * lambda * d_max^2 + 1).
  double step = 0.0;
  int iters = 100;
  int sinkhorn_max_iters = 1000;
  double sinkhorn_tol = 1e-6;
};

// Exponentiated projected-gradient ascent on the trace objective over the
// relaxed assignment set, using the raw attribute matrices. Each step
// multiplies P by exp(step * (U + 2 lambda D_A P D_B)) and re-projects with a
// Sinkhorn scaling; the last iterate is rounded with the Hungarian method.
MatchResult PgdSolve(const MatchProblem& problem,
                     const PgdParams& params = PgdParams());

}  // namespace clapmatch

#endif  // CLAPMATCH_BASELINES_H_
