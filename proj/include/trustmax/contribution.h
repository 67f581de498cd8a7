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

#ifndef TRUSTMAX_CONTRIBUTION_H_
#define TRUSTMAX_CONTRIBUTION_H_

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "trustmax/dynamics.h"
#include "trustmax/graph.h"

namespace trustmax {

// g = (1^T Q^U)^T. Since p(z*) = 1^T Q s = g^T s, g_i is the leverage of
// node i's internal opinion on the overall opinion.
struct ContributionIndex {
  Eigen::VectorXd g;
  std::vector<int> pinned;

  int size() const { return static_cast<int>(g.size()); }
  double operator[](int i) const { return g[i]; }
};

// Column sums of an already materialized Q.
ContributionIndex ComputeContributionIndex(const FundamentalMatrix& fm);

// One transposed solve (Lbar_U + I)^T x = 1, without forming Q.
ContributionIndex SolveContributionIndex(const LaplacianSystem& ls,
                                         std::span<const int> pinned = {});

enum class RankBy { kAbsolute, kSigned };

// Descending by |g_i| or g_i; ties go to the lower node index.
std::vector<std::pair<int, double>> RankByContribution(
    const ContributionIndex& ci, RankBy by);

}  // namespace trustmax

#endif  // TRUSTMAX_CONTRIBUTION_H_
