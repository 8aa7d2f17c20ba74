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

// Graph-side data (keypoints + descriptors), edge-attribute construction,
// node similarity and the matching accuracy metric.

#ifndef CLAPMATCH_GRAPH_MODEL_H_
#define CLAPMATCH_GRAPH_MODEL_H_

#include <Eigen/Dense>

#include <span>
#include <string_view>
#include <vector>

namespace clapmatch {

// One row per node, columns (x, y) in pixels.
using Points = Eigen::Matrix<double, Eigen::Dynamic, 2>;

// One graph of a matching pair. Immutable after construction.
class GraphSide {
 public:
  // Throws InvalidInputError unless points.rows() == descriptors.rows() >= 1,
  // descriptors.cols() >= 1 and every value is finite.
  GraphSide(Points points, Eigen::MatrixXd descriptors);

  const Points& points() const { return points_; }
  // Row i is the descriptor of node i.
  const Eigen::MatrixXd& descriptors() const { return descriptors_; }
  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index descriptor_dim() const { return descriptors_.cols(); }

  bool operator==(const GraphSide& other) const;

 private:
  Points points_;
  Eigen::MatrixXd descriptors_;
};

enum class AttributeKind { kLength, kAdjacency, kInnerProduct };

std::string_view ToString(AttributeKind kind);
// Accepts "length", "adjacency", "inner_product". Throws InvalidInputError.
AttributeKind ParseAttributeKind(std::string_view name);

// Square symmetric matrix of pairwise node relations with a zero diagonal.
class EdgeAttributeMatrix {
 public:
  // Throws InvalidInputError if `values` is not square, not exactly
  // symmetric, has a non-zero diagonal entry or a non-finite entry.
  EdgeAttributeMatrix(Eigen::MatrixXd values, AttributeKind kind);

  const Eigen::MatrixXd& values() const { return values_; }
  AttributeKind kind() const { return kind_; }
  Eigen::Index size() const { return values_.rows(); }

 private:
  Eigen::MatrixXd values_;
  AttributeKind kind_;
};

// U, n x m, entry (i, j) scores node i of side A against node j of side B.
class NodeSimilarity {
 public:
  explicit NodeSimilarity(Eigen::MatrixXd values);

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }

 private:
  Eigen::MatrixXd values_;
};

// Injective map from rows to columns: every row matched exactly once, every
// column at most once. Stored as the column index of each row.
class HardAssignment {
 public:
  HardAssignment(std::vector<int> column_of_row, int cols);

  static HardAssignment Identity(int n);
  // Throws InvalidInputError unless `values` is a 0/1 matrix with unit row
  // sums and column sums <= 1.
  static HardAssignment FromMatrix(const Eigen::MatrixXd& values);

  int rows() const { return static_cast<int>(column_of_row_.size()); }
  int cols() const { return cols_; }
  int column_of(int row) const { return column_of_row_[row]; }
  std::span<const int> columns() const { return column_of_row_; }
  Eigen::MatrixXd ToMatrix() const;

  bool operator==(const HardAssignment&) const = default;

 private:
  std::vector<int> column_of_row_;
  int cols_;
};

// Pairwise Euclidean distances. With `normalize`, divided by the largest
// pairwise distance so the maximum entry is exactly 1.
EdgeAttributeMatrix BuildLengthAttributes(const Points& points, bool normalize);

// 0/1 Delaunay adjacency. Points without any non-collinear triple fall back
// to a chain along the dominant axis.
EdgeAttributeMatrix BuildAdjacencyAttributes(const Points& points);

// Descriptor inner products off the diagonal, zero on it.
EdgeAttributeMatrix BuildInnerProductAttributes(const Eigen::MatrixXd& descriptors);

EdgeAttributeMatrix BuildAttributes(const GraphSide& side, AttributeKind kind,
                                    bool normalize_lengths);

// U = scale * desc_A * desc_B^T (identity metric).
NodeSimilarity ComputeNodeSimilarity(const GraphSide& a, const GraphSide& b,
                                     double scale = 1.0);

// Fraction of rows whose assignment agrees with `truth`.
double Accuracy(const HardAssignment& p, const HardAssignment& truth);

}  // namespace clapmatch

#endif  // CLAPMATCH_GRAPH_MODEL_H_
