// Copyright 2026 The Trustmax Authors.
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

#include "trustmax/lp.h"

#include <limits>
#include <vector>

#include "trustmax/errors.h"

namespace trustmax {

LpResult SolveLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                 const Eigen::VectorXd& c) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.size() != m || c.size() != n) throw UsageError("LP shape mismatch");
  if ((b.array() < 0.0).any()) throw UsageError("LP needs b >= 0");
  constexpr double kEps = 1e-12;

  // Tableau [A I | b] with the objective row -c stored last.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = a;
  t.block(0, n, m, m).setIdentity();
  t.col(n + m).head(m) = b;
  t.row(m).head(n) = -c.transpose();
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index r = 0; r < m; ++r) basis[r] = n + r;

  LpResult result;
  while (true) {
    // Bland: lowest-index column with negative reduced cost.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) < -kEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < m; ++r) {
      if (t(r, enter) > kEps) {
        const double ratio = t(r, n + m) / t(r, enter);
        if (ratio < best_ratio - kEps ||
            (ratio <= best_ratio + kEps && leave >= 0 &&
             basis[r] < basis[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) {
      result.bounded = false;
      result.objective = std::numeric_limits<double>::infinity();
      return result;
    }
    t.row(leave) /= t(leave, enter);
    for (Eigen::Index r = 0; r <= m; ++r) {
      if (r != leave && t(r, enter) != 0.0) {
        t.row(r) -= t(r, enter) * t.row(leave);
      }
    }
    basis[leave] = enter;
  }

  result.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    if (basis[r] < n) result.x[basis[r]] = t(r, n + m);
  }
  result.objective = c.dot(result.x);
  return result;
}

}  // namespace trustmax
