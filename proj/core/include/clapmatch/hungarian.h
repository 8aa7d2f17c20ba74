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

#ifndef CLAPMATCH_HUNGARIAN_H_
#define CLAPMATCH_HUNGARIAN_H_

#include <Eigen/Dense>

#include "clapmatch/graph_model.h"
#include "clapmatch/sinkhorn.h"

namespace clapmatch {

// Rectangular linear assignment (rows <= cols): the injective row->column map
// maximizing the summed scores. Shortest augmenting paths with potentials,
// O(rows^2 * cols). Equal-score alternatives resolve to the lowest column
// index found first, which makes the result deterministic.
//
// Throws InvalidInputError when rows > cols or scores are non-finite.
HardAssignment MaximizeLinearAssignment(const Eigen::MatrixXd& scores);

// Discretizes a relaxed assignment; dummy padding rows are ignored.
HardAssignment Hungarian(const SoftAssignment& p);

}  // namespace clapmatch

#endif  // CLAPMATCH_HUNGARIAN_H_
