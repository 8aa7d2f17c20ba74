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

#include "clapmatch/psd_transform.h"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "clapmatch/errors.h"

namespace clapmatch {

Eigen::VectorXd RowAbsoluteRadius(const EdgeAttributeMatrix& d) {
  // The diagonal is zero by construction, so the full row sum is the radius.
  return d.values().cwiseAbs().rowwise().sum();
}

ShiftedPair PsdShift(const EdgeAttributeMatrix& d_a,
                     const EdgeAttributeMatrix& d_b) {
  ShiftedPair out;
  const Eigen::VectorXd ra = RowAbsoluteRadius(d_a);
  const Eigen::VectorXd rb = RowAbsoluteRadius(d_b);
  const double max_a = ra.size() > 0 ? ra.maxCoeff() : 0.0;
  const double max_b = rb.size() > 0 ? rb.maxCoeff() : 0.0;
  out.d_max = std::max(max_a, max_b);
  out.d_hat_a = d_a.values();
  out.d_hat_a.diagonal().setConstant(out.d_max);
  out.d_hat_b = d_b.values();
  out.d_hat_b.diagonal().setConstant(out.d_max);
  return out;
}

namespace {

struct Spectrum {
  Eigen::MatrixXd vectors;  // n x rank, by decreasing eigenvalue
  Eigen::VectorXd roots;    // square roots of the kept eigenvalues
};

Spectrum KeptSpectrum(const Eigen::MatrixXd& d_hat, double tol) {
  if (d_hat.rows() != d_hat.cols()) {
    throw InvalidInputError("factorize: matrix must be square");
  }
  if (!(tol >= 0.0)) throw InvalidInputError("factorize: tolerance must be >= 0");
  const Eigen::Index n = d_hat.rows();
  if (n == 0) return {Eigen::MatrixXd(0, 0), Eigen::VectorXd(0)};
  if (!d_hat.allFinite()) {
    throw InvalidInputError("factorize: matrix has non-finite entries");
  }
  const double magnitude = d_hat.cwiseAbs().maxCoeff();
  if ((d_hat - d_hat.transpose()).cwiseAbs().maxCoeff() > 1e-12 * magnitude) {
    throw InvalidInputError("factorize: matrix must be symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(d_hat);
  if (eig.info() != Eigen::Success) {
    throw InvalidInputError("factorize: eigendecomposition failed");
  }
  const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
  const double scale = lambda.cwiseAbs().maxCoeff();
  const double threshold = tol * scale;
  if (lambda(0) < -threshold) throw NotPsdError(lambda(0), threshold);

  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda(i) > threshold) ++rank;
  }
  Spectrum out{Eigen::MatrixXd(n, rank), Eigen::VectorXd(rank)};
  for (Eigen::Index c = 0; c < rank; ++c) {
    const Eigen::Index src = n - 1 - c;
    out.vectors.col(c) = eig.eigenvectors().col(src);
    out.roots(c) = std::sqrt(lambda(src));
  }
  return out;
}

}  // namespace

Eigen::MatrixXd Factorize(const Eigen::MatrixXd& d_hat, double tol) {
  const Spectrum s = KeptSpectrum(d_hat, tol);
  return s.vectors * s.roots.asDiagonal();
}

Eigen::MatrixXd SymmetricRoot(const Eigen::MatrixXd& d_hat, double tol) {
  const Spectrum s = KeptSpectrum(d_hat, tol);
  // Rank zero keeps the empty factor, same as Factorize.
  if (s.roots.size() == 0) return Eigen::MatrixXd(d_hat.rows(), 0);
  return s.vectors * s.roots.asDiagonal() * s.vectors.transpose();
}

Eigen::MatrixXd Factor(const Eigen::MatrixXd& d_hat, FactorForm form, double tol) {
  return form == FactorForm::kEigenColumns ? Factorize(d_hat, tol)
                                           : SymmetricRoot(d_hat, tol);
}

FactoredStructure PrepareStructure(const EdgeAttributeMatrix& d_a,
                                   const EdgeAttributeMatrix& d_b, double tol,
                                   FactorForm form) {
  ShiftedPair shifted = PsdShift(d_a, d_b);
  FactoredStructure out;
  out.h_a = Factor(shifted.d_hat_a, form, tol);
  out.h_b = Factor(shifted.d_hat_b, form, tol);
  out.d_hat_a = std::move(shifted.d_hat_a);
  out.d_hat_b = std::move(shifted.d_hat_b);
  out.d_max = shifted.d_max;
  return out;
}

}  // namespace clapmatch
