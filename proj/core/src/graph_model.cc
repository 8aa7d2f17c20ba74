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

#include "clapmatch/graph_model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "clapmatch/delaunay.h"
#include "clapmatch/errors.h"

namespace clapmatch {

GraphSide::GraphSide(Points points, Eigen::MatrixXd descriptors)
    : points_(std::move(points)), descriptors_(std::move(descriptors)) {
  if (points_.rows() < 1) {
    throw InvalidInputError("graph side needs at least one node");
  }
  if (points_.rows() != descriptors_.rows()) {
    throw InvalidInputError("graph side has " + std::to_string(points_.rows()) +
                            " points but " + std::to_string(descriptors_.rows()) +
                            " descriptors");
  }
  if (descriptors_.cols() < 1) {
    throw InvalidInputError("descriptor dimension must be at least 1");
  }
  if (!points_.allFinite() || !descriptors_.allFinite()) {
    throw InvalidInputError("graph side contains non-finite values");
  }
}

bool GraphSide::operator==(const GraphSide& other) const {
  return points_.rows() == other.points_.rows() &&
         descriptors_.cols() == other.descriptors_.cols() &&
         points_ == other.points_ && descriptors_ == other.descriptors_;
}

std::string_view ToString(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::kLength:
      return "length";
    case AttributeKind::kAdjacency:
      return "adjacency";
    case AttributeKind::kInnerProduct:
      return "inner_product";
  }
  return "unknown";
}

AttributeKind ParseAttributeKind(std::string_view name) {
  if (name == "length") return AttributeKind::kLength;
  if (name == "adjacency") return AttributeKind::kAdjacency;
  if (name == "inner_product") return AttributeKind::kInnerProduct;
  throw InvalidInputError("unknown attribute kind '" + std::string(name) + "'");
}

EdgeAttributeMatrix::EdgeAttributeMatrix(Eigen::MatrixXd values,
                                         AttributeKind kind)
    : values_(std::move(values)), kind_(kind) {
  if (values_.rows() != values_.cols()) {
    throw InvalidInputError("edge attribute matrix must be square");
  }
  if (!values_.allFinite()) {
    throw InvalidInputError("edge attribute matrix has non-finite entries");
  }
  for (Eigen::Index i = 0; i < values_.rows(); ++i) {
    if (values_(i, i) != 0.0) {
      throw InvalidInputError("edge attribute matrix diagonal must be zero");
    }
    for (Eigen::Index j = i + 1; j < values_.cols(); ++j) {
      if (values_(i, j) != values_(j, i)) {
        throw InvalidInputError("edge attribute matrix must be symmetric");
      }
    }
  }
}

NodeSimilarity::NodeSimilarity(Eigen::MatrixXd values)
    : values_(std::move(values)) {
  if (!values_.allFinite()) {
    throw InvalidInputError("node similarity has non-finite entries");
  }
}

HardAssignment::HardAssignment(std::vector<int> column_of_row, int cols)
    : column_of_row_(std::move(column_of_row)), cols_(cols) {
  if (cols_ < 0) throw InvalidInputError("negative column count");
  std::vector<bool> used(static_cast<size_t>(cols_), false);
  for (int c : column_of_row_) {
    if (c < 0 || c >= cols_) {
      throw InvalidInputError("assignment column " + std::to_string(c) +
                              " out of range [0, " + std::to_string(cols_) + ")");
    }
    if (used[c]) {
      throw InvalidInputError("column " + std::to_string(c) +
                              " assigned more than once");
    }
    used[c] = true;
  }
}

HardAssignment HardAssignment::Identity(int n) {
  std::vector<int> cols(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cols[i] = i;
  return HardAssignment(std::move(cols), n);
}

HardAssignment HardAssignment::FromMatrix(const Eigen::MatrixXd& values) {
  std::vector<int> cols(static_cast<size_t>(values.rows()), -1);
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      const double v = values(i, j);
      if (v == 1.0) {
        if (cols[i] != -1) {
          throw InvalidInputError("row " + std::to_string(i) +
                                  " has more than one assignment");
        }
        cols[i] = static_cast<int>(j);
      } else if (v != 0.0) {
        throw InvalidInputError("assignment matrix entries must be 0 or 1");
      }
    }
    if (cols[i] == -1) {
      throw InvalidInputError("row " + std::to_string(i) + " is unassigned");
    }
  }
  return HardAssignment(std::move(cols), static_cast<int>(values.cols()));
}

Eigen::MatrixXd HardAssignment::ToMatrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows(), cols_);
  for (int i = 0; i < rows(); ++i) m(i, column_of_row_[i]) = 1.0;
  return m;
}

EdgeAttributeMatrix BuildLengthAttributes(const Points& points, bool normalize) {
  const Eigen::Index n = points.rows();
  if (n < 2) throw InvalidInputError("length attributes need at least 2 points");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  double max_length = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double len = (points.row(i) - points.row(j)).norm();
      d(i, j) = len;
      d(j, i) = len;
      max_length = std::max(max_length, len);
    }
  }
  if (normalize) {
    if (max_length == 0.0) {
      throw DegenerateGeometryError(
          "cannot normalize lengths: all points coincide");
    }
    d /= max_length;
  }
  return EdgeAttributeMatrix(std::move(d), AttributeKind::kLength);
}

EdgeAttributeMatrix BuildAdjacencyAttributes(const Points& points) {
  const Eigen::Index n = points.rows();
  if (n < 2) {
    throw InvalidInputError("adjacency attributes need at least 2 points");
  }
  std::vector<Edge> edges = DelaunayEdges(points);
  if (edges.empty()) edges = ChainEdges(points);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : edges) {
    d(i, j) = 1.0;
    d(j, i) = 1.0;
  }
  return EdgeAttributeMatrix(std::move(d), AttributeKind::kAdjacency);
}

EdgeAttributeMatrix BuildInnerProductAttributes(
    const Eigen::MatrixXd& descriptors) {
  const Eigen::Index n = descriptors.rows();
  if (n < 2) {
    throw InvalidInputError("inner-product attributes need at least 2 descriptors");
  }
  if (descriptors.cols() < 1) {
    throw InvalidInputError("descriptor dimension must be at least 1");
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dot = descriptors.row(i).dot(descriptors.row(j));
      d(i, j) = dot;
      d(j, i) = dot;
    }
  }
  return EdgeAttributeMatrix(std::move(d), AttributeKind::kInnerProduct);
}

EdgeAttributeMatrix BuildAttributes(const GraphSide& side, AttributeKind kind,
                                    bool normalize_lengths) {
  switch (kind) {
    case AttributeKind::kLength:
      return BuildLengthAttributes(side.points(), normalize_lengths);
    case AttributeKind::kAdjacency:
      return BuildAdjacencyAttributes(side.points());
    case AttributeKind::kInnerProduct:
      return BuildInnerProductAttributes(side.descriptors());
  }
  throw InvalidInputError("unknown attribute kind");
}

NodeSimilarity ComputeNodeSimilarity(const GraphSide& a, const GraphSide& b,
                                     double scale) {
  if (a.descriptor_dim() != b.descriptor_dim()) {
    throw InvalidInputError("descriptor dimensions differ: " +
                            std::to_string(a.descriptor_dim()) + " vs " +
                            std::to_string(b.descriptor_dim()));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidInputError("similarity scale must be positive and finite");
  }
  return NodeSimilarity(scale * (a.descriptors() * b.descriptors().transpose()));
}

double Accuracy(const HardAssignment& p, const HardAssignment& truth) {
  if (p.rows() != truth.rows() || p.cols() != truth.cols()) {
    throw InvalidInputError("accuracy: assignment shapes differ");
  }
  if (p.rows() == 0) throw InvalidInputError("accuracy: empty assignment");
  int agree = 0;
  for (int i = 0; i < p.rows(); ++i) {
    if (p.column_of(i) == truth.column_of(i)) ++agree;
  }
  return static_cast<double>(agree) / p.rows();
}

}  // namespace clapmatch
