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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <random>

#include "clapmatch/errors.h"
#include "oracles.h"

namespace clapmatch {
namespace {

EdgeAttributeMatrix Attr(const Eigen::MatrixXd& m) {
  return EdgeAttributeMatrix(m, AttributeKind::kInnerProduct);
}

double MinEigenvalue(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly)
      .eigenvalues()(0);
}

double RelativeReconstruction(const Eigen::MatrixXd& h, const Eigen::MatrixXd& d) {
  const double norm = d.norm();
  const double err = (h * h.transpose() - d).norm();
  return norm > 0.0 ? err / norm : err;
}

TEST(RowAbsoluteRadiusTest, Examples) {
  Eigen::MatrixXd a(2, 2);
  a << 0, 1, 1, 0;
  EXPECT_EQ(RowAbsoluteRadius(Attr(a)), Eigen::Vector2d(1, 1));
  Eigen::MatrixXd b(3, 3);
  b << 0, -2, 3, -2, 0, 0, 3, 0, 0;
  EXPECT_EQ(RowAbsoluteRadius(Attr(b)), Eigen::Vector3d(5, 2, 3));
}

TEST(RowAbsoluteRadiusTest, MatchesDoubleLoop) {
  std::mt19937_64 rng(1);
  const Eigen::MatrixXd d = oracle::RandomSymmetricZeroDiag(8, -5, 5, rng);
  const Eigen::VectorXd r = RowAbsoluteRadius(Attr(d));
  for (int i = 0; i < 8; ++i) {
    double sum = 0.0;
    for (int k = 0; k < 8; ++k)
      if (k != i) sum += std::abs(d(i, k));
    EXPECT_NEAR(r(i), sum, 1e-13);
  }
}

TEST(PsdShiftTest, Examples) {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 0, 3, 3, 0;
  const ShiftedPair s = PsdShift(Attr(a), Attr(b));
  EXPECT_EQ(s.d_max, 3.0);
  Eigen::MatrixXd ea(2, 2), eb(2, 2);
  ea << 3, 1, 1, 3;
  eb << 3, 3, 3, 3;
  EXPECT_EQ(s.d_hat_a, ea);
  EXPECT_EQ(s.d_hat_b, eb);

  const ShiftedPair z =
      PsdShift(Attr(Eigen::MatrixXd::Zero(3, 3)), Attr(Eigen::MatrixXd::Zero(4, 4)));
  EXPECT_EQ(z.d_max, 0.0);
  EXPECT_EQ(z.d_hat_a, Eigen::MatrixXd::Zero(3, 3));
  EXPECT_EQ(z.d_hat_b, Eigen::MatrixXd::Zero(4, 4));
}

// Gershgorin: off-diagonals untouched, shared diagonal, no negative spectrum.
TEST(PsdShiftProperty, GershgorinGuarantee) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> size(2, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXd a = oracle::RandomSymmetricZeroDiag(size(rng), -10, 10, rng);
    const Eigen::MatrixXd b = oracle::RandomSymmetricZeroDiag(size(rng), -10, 10, rng);
    const ShiftedPair s = PsdShift(Attr(a), Attr(b));
    EXPECT_GE(MinEigenvalue(s.d_hat_a), -1e-10 * std::max(1.0, s.d_max));
    EXPECT_GE(MinEigenvalue(s.d_hat_b), -1e-10 * std::max(1.0, s.d_max));
    Eigen::MatrixXd off_a = s.d_hat_a, off_b = s.d_hat_b;
    off_a.diagonal().setZero();
    off_b.diagonal().setZero();
    EXPECT_EQ(off_a, a);
    EXPECT_EQ(off_b, b);
    EXPECT_TRUE((s.d_hat_a.diagonal().array() == s.d_max).all());
    EXPECT_TRUE((s.d_hat_b.diagonal().array() == s.d_max).all());
  }
}

TEST(FactorizeTest, RankOne) {
  const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(2, 2);
  const Eigen::MatrixXd h = Factorize(ones);
  ASSERT_EQ(h.cols(), 1);
  EXPECT_NEAR(std::abs(h(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(h(0, 0), h(1, 0), 1e-12);
  EXPECT_LE((h * h.transpose() - ones).norm(), 1e-12);
}

TEST(FactorizeTest, IdentityReconstructs) {
  const Eigen::MatrixXd h = Factorize(Eigen::MatrixXd::Identity(3, 3));
  EXPECT_EQ(h.cols(), 3);
  EXPECT_LE((h * h.transpose() - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-12);
  EXPECT_LE((h.transpose() * h - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-12);
}

TEST(FactorizeTest, Errors) {
  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 0, 1, 1, 0;
  EXPECT_THROW(Factorize(indefinite), NotPsdError);
  EXPECT_THROW(SymmetricRoot(indefinite), NotPsdError);
  EXPECT_THROW(Factorize(Eigen::MatrixXd::Ones(2, 3)), InvalidInputError);
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 0.5, 0.2, 1;
  EXPECT_THROW(Factorize(asym), InvalidInputError);
}

TEST(FactorizeTest, ShiftedRandomPairReconstructs) {
  std::mt19937_64 rng(4);
  const ShiftedPair s = PsdShift(Attr(oracle::RandomSymmetricZeroDiag(8, -3, 3, rng)),
                                 Attr(oracle::RandomSymmetricZeroDiag(8, -3, 3, rng)));
  for (const Eigen::MatrixXd* d : {&s.d_hat_a, &s.d_hat_b}) {
    EXPECT_LE(RelativeReconstruction(Factorize(*d), *d), 1e-8);
    EXPECT_LE(RelativeReconstruction(SymmetricRoot(*d), *d), 1e-8);
  }
}

TEST(FactorizeTest, DropsNullDirections) {
  // Rank 2 in 4 dimensions.
  std::mt19937_64 rng(6);
  const Eigen::MatrixXd g = oracle::RandomMatrix(4, 2, -1, 1, rng);
  const Eigen::MatrixXd d = g * g.transpose();
  EXPECT_EQ(Factorize(d).cols(), 2);
  const Eigen::MatrixXd root = SymmetricRoot(d);
  EXPECT_EQ(root.cols(), 4);
  EXPECT_LE((root - root.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(RelativeReconstruction(root, d), 1e-8);
}

TEST(SymmetricRootTest, CommutesWithRelabeling) {
  std::mt19937_64 rng(9);
  const Eigen::MatrixXd d = PsdShift(Attr(oracle::RandomSymmetricZeroDiag(7, 0, 1, rng)),
                                     Attr(Eigen::MatrixXd::Zero(2, 2)))
                                .d_hat_a;
  std::vector<int> perm{3, 0, 6, 1, 5, 2, 4};
  const Eigen::MatrixXd p = oracle::PermutationMatrix(perm, 7);
  const Eigen::MatrixXd lhs = SymmetricRoot(p * d * p.transpose());
  const Eigen::MatrixXd rhs = p * SymmetricRoot(d) * p.transpose();
  EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(PrepareStructureTest, ZeroMatricesGiveEmptyFactors) {
  const FactoredStructure s =
      PrepareStructure(Attr(Eigen::MatrixXd::Zero(3, 3)), Attr(Eigen::MatrixXd::Zero(3, 3)));
  EXPECT_EQ(s.d_max, 0.0);
  EXPECT_EQ(s.h_a.cols(), 0);
  EXPECT_EQ(s.h_b.cols(), 0);
  EXPECT_EQ(s.h_a.rows(), 3);
}

TEST(PrepareStructureTest, ShiftExamplePairReconstructs) {
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << 0, 3, 3, 0;
  for (FactorForm form : {FactorForm::kSymmetricRoot, FactorForm::kEigenColumns}) {
    const FactoredStructure s = PrepareStructure(Attr(a), Attr(b), kDefaultEigenTolerance, form);
    EXPECT_LE((s.h_a * s.h_a.transpose() - s.d_hat_a).norm(), 1e-12);
    EXPECT_LE((s.h_b * s.h_b.transpose() - s.d_hat_b).norm(), 1e-12);
  }
  // B_hat = 3 * ones is rank one.
  EXPECT_EQ(PrepareStructure(Attr(a), Attr(b), kDefaultEigenTolerance,
                             FactorForm::kEigenColumns)
                .h_b.cols(),
            1);
}

TEST(PrepareStructureProperty, InvariantsOnLengthMatrices) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 12, m = n + trial % 3;
    const EdgeAttributeMatrix d_a =
        BuildLengthAttributes(oracle::RandomMatrix(n, 2, 0, 256, rng), trial % 2 == 0);
    const EdgeAttributeMatrix d_b =
        BuildLengthAttributes(oracle::RandomMatrix(m, 2, 0, 256, rng), trial % 2 == 0);
    const FactoredStructure s = PrepareStructure(d_a, d_b);
    EXPECT_LE((s.h_a * s.h_a.transpose() - s.d_hat_a).norm(), 1e-8 * n * s.d_max);
    EXPECT_LE((s.h_b * s.h_b.transpose() - s.d_hat_b).norm(), 1e-8 * m * s.d_max);
    EXPECT_LE(s.h_a.cols(), n);
    EXPECT_LE(s.h_b.cols(), m);
    EXPECT_GE(MinEigenvalue(s.d_hat_a), -1e-8 * s.d_max);
    EXPECT_GE(MinEigenvalue(s.d_hat_b), -1e-8 * s.d_max);
    Eigen::MatrixXd off = s.d_hat_a;
    off.diagonal().setZero();
    EXPECT_EQ(off, d_a.values());
  }
}

}  // namespace
}  // namespace clapmatch
