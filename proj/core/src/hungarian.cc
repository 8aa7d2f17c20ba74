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

#include "clapmatch/hungarian.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "clapmatch/errors.h"

namespace clapmatch {

HardAssignment MaximizeLinearAssignment(const Eigen::MatrixXd& scores) {
  const int n = static_cast<int>(scores.rows());
  const int m = static_cast<int>(scores.cols());
  if (n > m) {
    throw InvalidInputError("assignment needs rows <= cols (got " +
                            std::to_string(n) + " x " + std::to_string(m) + ")");
  }
  if (!scores.allFinite()) {
    throw InvalidInputError("assignment scores must be finite");
  }
  if (n == 0) return HardAssignment({}, m);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based: index 0 is the virtual source row/column.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<int> row_of_col(m + 1, 0), way(m + 1, 0);
  std::vector<double> min_slack(m + 1);
  std::vector<bool> used(m + 1);

  for (int i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    int j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const int i0 = row_of_col[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cost = -scores(i0 - 1, j - 1);
        const double cur = cost - u[i0] - v[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> column_of_row(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (row_of_col[j] != 0) column_of_row[row_of_col[j] - 1] = j - 1;
  }
  return HardAssignment(std::move(column_of_row), m);
}

HardAssignment Hungarian(const SoftAssignment& p) {
  return MaximizeLinearAssignment(p.Real());
}

}  // namespace clapmatch
