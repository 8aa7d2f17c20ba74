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

// Concave linear approximation of the Koopmans-Beckmann QAP.
//
// With D_hat_A = H_A H_A^T and D_hat_B = H_B H_B^T, the quadratic structure
// term tr(P^T D_hat_A P D_hat_B) equals ||H_A^T P H_B||_F^2. The solver
// replaces it by the L1 norm sum|H_A^T P H_B| and adds entropy. The factors
// are the symmetric square roots from PrepareStructure. Maximizes
//
//   F(P) = <U, P> + lambda * sum_kl |(H_A^T P H_B)_kl| + epsilon * h(P),
//   h(P) = -sum_ij P_ij log P_ij,
//
// over matrices with unit row sums and column sums <= 1. For a fixed sign
// pattern S of H_A^T P H_B the stationarity condition is a Sinkhorn scaling
// of exp(M / epsilon) with M = U + lambda * H_A S H_B^T. Solve() alternates
// the sign update with that scaling and finishes with a Hungarian rounding.
// Each step maximizes a minorizer of F that is tight at the current P, so on
// square problems the recorded objective never decreases.

#ifndef CLAPMATCH_CLAP_SOLVER_H_
#define CLAPMATCH_CLAP_SOLVER_H_

#include <Eigen/Dense>

#include <vector>

#include "clapmatch/graph_model.h"
#include "clapmatch/psd_transform.h"
#include "clapmatch/sinkhorn.h"

namespace clapmatch {

struct SolverParams {
  double lambda = 0.1;   // structure weight
  double epsilon = 1.0;  // entropy weight
  int sinkhorn_max_iters = 1000;
  double sinkhorn_tol = 1e-6;  // marginal L-infinity tolerance
  int outer_max_iters = 50;
  double outer_tol = 1e-5;  // L-infinity change of P between outer iterations

  // Throws InvalidInputError on lambda < 0, epsilon <= 0, non-positive
  // tolerances or iteration caps.
  void Validate() const;
};

// A matching instance: node similarity U (n x m), the raw edge attributes of
// both sides and their PSD-shifted factorization.
class MatchProblem {
 public:
  // Throws InvalidInputError when U's shape does not match the attribute
  // matrices; propagates NotPsdError from the factorization.
  MatchProblem(NodeSimilarity u, EdgeAttributeMatrix d_a, EdgeAttributeMatrix d_b,
               double eigen_tol = kDefaultEigenTolerance);

  // Builds attributes of `kind` for both sides and U with an identity metric.
  // Single-node sides get a 1 x 1 zero attribute matrix.
  static MatchProblem FromSides(const GraphSide& a, const GraphSide& b,
                                AttributeKind kind, bool normalize_lengths = true,
                                double similarity_scale = 1.0);

  const NodeSimilarity& u() const { return u_; }
  const EdgeAttributeMatrix& d_a() const { return d_a_; }
  const EdgeAttributeMatrix& d_b() const { return d_b_; }
  const FactoredStructure& structure() const { return structure_; }
  int rows() const { return static_cast<int>(u_.rows()); }
  int cols() const { return static_cast<int>(u_.cols()); }

 private:
  NodeSimilarity u_;
  EdgeAttributeMatrix d_a_;
  EdgeAttributeMatrix d_b_;
  FactoredStructure structure_;
};

struct MatchResult {
  HardAssignment hard;
  SoftAssignment soft;  // padded to square when rows < cols
  std::vector<double> objective_trace;
  int outer_iters = 0;
  int sinkhorn_iters_total = 0;
  // Last Sinkhorn solve met its tolerance and the outer loop stopped before
  // its cap.
  bool converged = false;
  double wall_time_ms = 0.0;
};

// Entrywise sign of H_A^T P H_B, with 0 wherever the magnitude is within
// 1e-12 of max|H_A| * max|H_B| * sum(P). `p` is n x m.
Eigen::MatrixXd SignMatrix(const Eigen::MatrixXd& h_a, const Eigen::MatrixXd& p,
                           const Eigen::MatrixXd& h_b);

// M = U + lambda * H_A S H_B^T.
Eigen::MatrixXd ScoreMatrix(const Eigen::MatrixXd& u, const Eigen::MatrixXd& h_a,
                            const Eigen::MatrixXd& s, const Eigen::MatrixXd& h_b,
                            double lambda);

// F(P) above for an n x m relaxed P. Throws InvalidInputError when an entry
// of `p` is not strictly positive or shapes disagree.
double ObjectiveValue(const Eigen::MatrixXd& p, const Eigen::MatrixXd& u,
                      const Eigen::MatrixXd& h_a, const Eigen::MatrixXd& h_b,
                      double lambda, double epsilon);

// F without the entropy term, for a discrete assignment.
double DiscreteObjectiveValue(const HardAssignment& p, const Eigen::MatrixXd& u,
                              const Eigen::MatrixXd& h_a,
                              const Eigen::MatrixXd& h_b, double lambda);

// Pads an n x m score matrix (n <= m) with m - n zero rows.
Eigen::MatrixXd PadToSquare(const Eigen::MatrixXd& scores);

// Throws InvalidInputError for rows > cols or invalid params.
MatchResult Solve(const MatchProblem& problem,
                  const SolverParams& params = SolverParams());

}  // namespace clapmatch

#endif  // CLAPMATCH_CLAP_SOLVER_H_
