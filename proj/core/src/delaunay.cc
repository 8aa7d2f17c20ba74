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

#include "clapmatch/delaunay.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace clapmatch {

namespace {

struct Frame {
  Points centered;
  double orient_tol = 0.0;
  double incircle_tol = 0.0;
};

// Centers the points and derives predicate tolerances from the extent.
Frame MakeFrame(const Points& points) {
  Frame f;
  const Eigen::RowVector2d center = points.colwise().mean();
  f.centered = points.rowwise() - center;
  const double extent =
      (points.colwise().maxCoeff() - points.colwise().minCoeff()).maxCoeff();
  const double l2 = extent * extent;
  f.orient_tol = 1e-12 * l2;
  f.incircle_tol = 1e-11 * l2 * l2;
  return f;
}

double Orient(const Points& p, int a, int b, int c) {
  return (p(b, 0) - p(a, 0)) * (p(c, 1) - p(a, 1)) -
         (p(b, 1) - p(a, 1)) * (p(c, 0) - p(a, 0));
}

// Positive when d is strictly inside the circle through counter-clockwise
// a, b, c.
double InCircle(const Points& p, int a, int b, int c, int d) {
  const double adx = p(a, 0) - p(d, 0), ady = p(a, 1) - p(d, 1);
  const double bdx = p(b, 0) - p(d, 0), bdy = p(b, 1) - p(d, 1);
  const double cdx = p(c, 0) - p(d, 0), cdy = p(c, 1) - p(d, 1);
  const double ad = adx * adx + ady * ady;
  const double bd = bdx * bdx + bdy * bdy;
  const double cd = cdx * cdx + cdy * cdy;
  return adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
         ad * (bdx * cdy - bdy * cdx);
}

void AddEdge(std::set<Edge>& edges, int u, int v) {
  edges.emplace(std::min(u, v), std::max(u, v));
}

// Triangulates one convex cocircular face as a fan from its lowest index.
void AddFace(const Points& p, const std::vector<int>& face,
             std::set<Edge>& edges) {
  if (face.size() == 3) {
    AddEdge(edges, face[0], face[1]);
    AddEdge(edges, face[1], face[2]);
    AddEdge(edges, face[0], face[2]);
    return;
  }
  Eigen::RowVector2d c = Eigen::RowVector2d::Zero();
  for (int v : face) c += p.row(v);
  c /= static_cast<double>(face.size());
  std::vector<int> ring = face;
  std::stable_sort(ring.begin(), ring.end(), [&](int u, int v) {
    return std::atan2(p(u, 1) - c(1), p(u, 0) - c(0)) <
           std::atan2(p(v, 1) - c(1), p(v, 0) - c(0));
  });
  for (size_t k = 0; k < ring.size(); ++k) {
    AddEdge(edges, ring[k], ring[(k + 1) % ring.size()]);
  }
  // face is sorted ascending, so face[0] is the lowest index.
  for (int v : face) {
    if (v != face[0]) AddEdge(edges, face[0], v);
  }
}

}  // namespace

std::vector<Edge> DelaunayEdges(const Points& points) {
  const int n = static_cast<int>(points.rows());
  if (n < 3) return {};
  const Frame frame = MakeFrame(points);
  const Points& p = frame.centered;

  std::set<std::vector<int>> faces;
  std::vector<int> cocircular;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const double o = Orient(p, i, j, k);
        if (std::abs(o) <= frame.orient_tol) continue;
        const int b = o > 0 ? j : k;
        const int c = o > 0 ? k : j;
        cocircular.assign({i, j, k});
        bool empty = true;
        for (int l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          const double det = InCircle(p, i, b, c, l);
          if (det > frame.incircle_tol) {
            empty = false;
          } else if (det >= -frame.incircle_tol) {
            cocircular.push_back(l);
          }
        }
        if (!empty) continue;
        std::sort(cocircular.begin(), cocircular.end());
        faces.insert(cocircular);
      }
    }
  }

  std::set<Edge> edges;
  for (const auto& face : faces) AddFace(p, face, edges);
  return {edges.begin(), edges.end()};
}

std::vector<Edge> ChainEdges(const Points& points) {
  const int n = static_cast<int>(points.rows());
  if (n < 2) return {};
  const Eigen::RowVector2d extent =
      points.colwise().maxCoeff() - points.colwise().minCoeff();
  const int axis = extent(1) > extent(0) ? 1 : 0;
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    return points(u, axis) < points(v, axis);
  });
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  for (int k = 0; k + 1 < n; ++k) {
    edges.emplace_back(std::min(order[k], order[k + 1]),
                       std::max(order[k], order[k + 1]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace clapmatch
