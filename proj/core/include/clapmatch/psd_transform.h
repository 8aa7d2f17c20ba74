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

// Diagonal shift that makes a pair of edge-attribute matrices positive
// semi-definite, and their low-rank factors D_hat = H * H^T.
//
// The shift writes the same value d_max on both diagonals, where d_max is the
// largest absolute off-diagonal row sum over the two matrices. Each Gershgorin
// disc is then centered at d_max with radius <= d_max, so no eigenvalue is
// negative. Off-diagonal entries are untouched and, because both diagonals
// carry the same constant, the Frobenius matching cost over permutations only
// moves by a constant.

#ifndef CLAPMATCH_PSD_TRANSFORM_H_
#define CLAPMATCH_PSD_TRANSFORM_H_

#include <Eigen/Dense>

#include "clapmatch/graph_model.h"

namespace clapmatch {

// Eigenvalues at or below this fraction of the largest eigenvalue magnitude
// are treated as zero.
inline constexpr double kDefaultEigenTolerance = 1e-10;

// Component i is sum_{k != i} |d(i, k)|.
Eigen::VectorXd RowAbsoluteRadius(const EdgeAttributeMatrix& d);

struct ShiftedPair {
  Eigen::MatrixXd d_hat_a;
  Eigen::MatrixXd d_hat_b;
  double d_max = 0.0;
};

ShiftedPair PsdShift(const EdgeAttributeMatrix& d_a,
                     const EdgeAttributeMatrix& d_b);

// Rank-revealing factor H (side x k) with H * H^T ~= d_hat, from the
// symmetric eigendecomposition. Columns are ordered by decreasing
// eigenvalue and only eigenvalues above tol * max|lambda| are kept.
//
// Throws InvalidInputError for non-square or asymmetric input and
// NotPsdError when an eigenvalue is below -tol * max|lambda|.
Eigen::MatrixXd Factorize(const Eigen::MatrixXd& d_hat,
                          double tol = kDefaultEigenTolerance);

// Principal square root Q_k * sqrt(Lambda_k) * Q_k^T (side x side, or side x 0
// at rank zero), same eigenvalue cut and errors as Factorize. Unlike the
// eigen-column factor it commutes with relabeling: SymmetricRoot(P D P^T) = P SymmetricRoot(D) P^T.
// The L1 structure term sum |H_A^T P H_B| depends on which factor is used,
// and only this one makes it a function of D_hat alone.
Eigen::MatrixXd SymmetricRoot(const Eigen::MatrixXd& d_hat,
                              double tol = kDefaultEigenTolerance);

enum class FactorForm { kSymmetricRoot, kEigenColumns };

Eigen::MatrixXd Factor(const Eigen::MatrixXd& d_hat, FactorForm form,
                       double tol = kDefaultEigenTolerance);

struct FactoredStructure {
  Eigen::MatrixXd d_hat_a;  // n x n
  Eigen::MatrixXd d_hat_b;  // m x m
  Eigen::MatrixXd h_a;      // n x k1, k1 <= n
  Eigen::MatrixXd h_b;      // m x k2, k2 <= m
  double d_max = 0.0;
};

FactoredStructure PrepareStructure(const EdgeAttributeMatrix& d_a,
                                   const EdgeAttributeMatrix& d_b,
                                   double tol = kDefaultEigenTolerance,
                                   FactorForm form = FactorForm::kSymmetricRoot);

}  // namespace clapmatch

#endif  // CLAPMATCH_PSD_TRANSFORM_H_
