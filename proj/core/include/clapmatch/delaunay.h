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

#ifndef CLAPMATCH_DELAUNAY_H_
#define CLAPMATCH_DELAUNAY_H_

#include <utility>
#include <vector>

#include "clapmatch/graph_model.h"

namespace clapmatch {

// Undirected edge (first < second).
using Edge = std::pair<int, int>;

// Edges of the Delaunay triangulation, sorted lexicographically.
//
// A triangle is kept when no other point lies strictly inside its
// circumcircle. Points lying on a shared empty circle form one convex
// Delaunay face; such faces are triangulated as a fan from their
// lowest-indexed vertex, so for a cocircular quad the chosen diagonal is the
// one incident to the lowest point index.
//
// Returns an empty list when every triple is collinear (or fewer than three
// points are given). Runs in O(n^4) worst case, fine for a few hundred nodes.
std::vector<Edge> DelaunayEdges(const Points& points);

// Consecutive pairs after sorting along the axis of largest extent (ties by
// index). Fallback topology for collinear point sets.
std::vector<Edge> ChainEdges(const Points& points);

}  // namespace clapmatch

#endif  // CLAPMATCH_DELAUNAY_H_
