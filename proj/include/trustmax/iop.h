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

// Internal opinion problem: choose ds with ||ds||_1 <= mu and
// -1 <= s + ds <= 1 maximizing g^T ds. Spending budget on the node with the
// largest |g_i| first, in the direction of sign(g_i), is optimal.

#ifndef TRUSTMAX_IOP_H_
#define TRUSTMAX_IOP_H_

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "trustmax/contribution.h"
#include "trustmax/dynamics.h"
#include "trustmax/graph.h"

namespace trustmax {

struct IopPlan {
  Eigen::VectorXd delta_s;
  double spent = 0.0;    // sum |ds_i|
  double benefit = 0.0;  // g^T ds
  // (node, ds_i) in the order budget was assigned.
  std::vector<std::pair<int, double>> steps;
};

// Greedy allocation in descending |g_i| (ties to lower index). Nodes with no
// headroom in their improving direction are skipped; the loop stops once the
// budget is gone or the remaining nodes all have g_i = 0.
IopPlan SolveIop(const ContributionIndex& ci, const OpinionVector& s, double mu);

// Throws ValidationError if `plan` violates the box or budget constraints, or
// if its recorded spent/benefit disagree with delta_s.
void ValidateIopPlan(const IopPlan& plan, const ContributionIndex& ci,
                     const OpinionVector& s, double mu);

struct IopOracleResult {
  double grid_benefit = 0.0;
  double lp_benefit = 0.0;
  double best = 0.0;
};

inline constexpr int kIopOracleMaxNodes = 8;
inline constexpr int kIopOracleMaxGrid = 21;

// Exhaustive check at desk scale (n <= 8, grid <= 21). The budget is cut into
// grid-1 equal units; every signed split of at most that many units across
// the nodes is tried, clipped to the box. The same problem is also solved as
// a linear program. g comes from its own dense inverse of (Lbar + I).
IopOracleResult IopOracle(const LaplacianSystem& ls, const OpinionVector& s,
                          double mu, int grid);

}  // namespace trustmax

#endif  // TRUSTMAX_IOP_H_
