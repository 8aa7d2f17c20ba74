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

#ifndef CLAPMATCH_SINKHORN_H_
#define CLAPMATCH_SINKHORN_H_

#include <Eigen/Dense>

namespace clapmatch {

// Relaxed assignment with strictly positive entries. When the original
// problem had fewer rows than columns the matrix carries dummy rows at the
// bottom; real_rows() says how many rows belong to the problem.
class SoftAssignment {
 public:
  // Throws InvalidInputError for non-positive or non-finite entries or a
  // real row count outside [0, rows].
  SoftAssignment(Eigen::MatrixXd values, int real_rows);
  explicit SoftAssignment(Eigen::MatrixXd values);

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::MatrixXd Real() const { return values_.topRows(real_rows_); }
  int real_rows() const { return real_rows_; }
  bool padded() const { return real_rows_ < values_.rows(); }

 private:
  Eigen::MatrixXd values_;
  int real_rows_;
};

struct SinkhornResult {
  SoftAssignment coupling;
  // Log-domain potentials: coupling = exp(scores / epsilon + f 1^T + 1 g^T).
  Eigen::VectorXd f;
  Eigen::VectorXd g;
  int iterations = 0;
  bool converged = false;
  // L-infinity deviation of row and column sums from 1.
  double marginal_error = 0.0;
};

// Entropic coupling of a square score matrix with unit marginals, computed by
// alternating log-sum-exp normalization of rows and columns. Stops when the
// marginal error is <= tol; on reaching max_iters the best iterate seen is
// returned with converged = false.
//
// `warm_g`, when non-empty, seeds the column potential.
//
// Throws InvalidInputError for non-square or non-finite scores, epsilon <= 0,
// max_iters < 1 or tol <= 0.
SinkhornResult SinkhornLog(const Eigen::MatrixXd& scores, double epsilon,
                           int max_iters, double tol,
                           const Eigen::VectorXd& warm_g = Eigen::VectorXd());

}  // namespace clapmatch

#endif  // CLAPMATCH_SINKHORN_H_
