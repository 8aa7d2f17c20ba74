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

#include "clapmatch/sinkhorn.h"

#include <cmath>
#include <limits>

#include "clapmatch/errors.h"

namespace clapmatch {

SoftAssignment::SoftAssignment(Eigen::MatrixXd values, int real_rows)
    : values_(std::move(values)), real_rows_(real_rows) {
  if (real_rows_ < 0 || real_rows_ > values_.rows()) {
    throw InvalidInputError("soft assignment: real row count out of range");
  }
  if (!values_.allFinite() || (values_.size() > 0 && values_.minCoeff() <= 0.0)) {
    throw InvalidInputError(
        "soft assignment entries must be finite and strictly positive");
  }
}

SoftAssignment::SoftAssignment(Eigen::MatrixXd values)
    : SoftAssignment(values, static_cast<int>(values.rows())) {}

namespace {

// -log sum_j exp(x_j + shift_j), stable for large magnitudes.
template <typename Row, typename Shift>
double NegLogSumExp(const Row& x, const Shift& shift) {
  const double peak = (x + shift).maxCoeff();
  return -(peak + std::log(((x + shift).array() - peak).exp().sum()));
}

double MarginalError(const Eigen::MatrixXd& p) {
  const double rows = (p.rowwise().sum().array() - 1.0).abs().maxCoeff();
  const double cols = (p.colwise().sum().array() - 1.0).abs().maxCoeff();
  return std::max(rows, cols);
}

}  // namespace

SinkhornResult SinkhornLog(const Eigen::MatrixXd& scores, double epsilon,
                           int max_iters, double tol,
                           const Eigen::VectorXd& warm_g) {
  const Eigen::Index n = scores.rows();
  if (n != scores.cols() || n == 0) {
    throw InvalidInputError("sinkhorn: score matrix must be square and non-empty");
  }
  if (!scores.allFinite()) {
    throw InvalidInputError("sinkhorn: score matrix has non-finite entries");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidInputError("sinkhorn: epsilon must be positive");
  }
  if (max_iters < 1) throw InvalidInputError("sinkhorn: max_iters must be >= 1");
  if (!(tol > 0.0)) throw InvalidInputError("sinkhorn: tol must be positive");
  if (warm_g.size() != 0 && warm_g.size() != n) {
    throw InvalidInputError("sinkhorn: warm start has wrong size");
  }

  const Eigen::MatrixXd log_kernel = scores / epsilon;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd g = warm_g.size() == n && warm_g.allFinite()
                          ? warm_g
                          : Eigen::VectorXd::Zero(n);

  Eigen::MatrixXd p(n, n);
  Eigen::VectorXd best_f, best_g;
  double best_error = std::numeric_limits<double>::infinity();
  int it = 0;
  bool converged = false;
  while (it < max_iters) {
    ++it;
    for (Eigen::Index i = 0; i < n; ++i) {
      f(i) = NegLogSumExp(log_kernel.row(i), g.transpose());
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      g(j) = NegLogSumExp(log_kernel.col(j), f);
    }
    p = ((log_kernel.colwise() + f).rowwise() + g.transpose()).array().exp();
    const double err = MarginalError(p);
    if (err < best_error) {
      best_error = err;
      best_f = f;
      best_g = g;
    }
    if (err <= tol) {
      converged = true;
      break;
    }
  }

  if (!converged) {
    f = best_f;
    g = best_g;
    p = ((log_kernel.colwise() + f).rowwise() + g.transpose()).array().exp();
  }
  // Entries below the normal range would break the entropy term.
  p = p.cwiseMax(std::numeric_limits<double>::min());
  return SinkhornResult{SoftAssignment(std::move(p)), std::move(f), std::move(g),
                        it, converged, best_error};
}

}  // namespace clapmatch
