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

#include "trustmax/contribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/LU>

#include "trustmax/errors.h"

namespace trustmax {

ContributionIndex ComputeContributionIndex(const FundamentalMatrix& fm) {
  return {fm.matrix().colwise().sum().transpose(), fm.pinned()};
}

ContributionIndex SolveContributionIndex(const LaplacianSystem& ls,
                                         std::span<const int> pinned) {
  const int n = ls.num_nodes();
  CheckDenseCap(n);
  const Eigen::MatrixXd system = ls.DenseSystem(pinned);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system.transpose());
  Eigen::VectorXd g = lu.solve(Eigen::VectorXd::Ones(n));
  if (!g.allFinite()) throw NumericalError("contribution solve is singular");
  return {std::move(g), std::vector<int>(pinned.begin(), pinned.end())};
}

std::vector<std::pair<int, double>> RankByContribution(
    const ContributionIndex& ci, RankBy by) {
  std::vector<int> order(ci.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    return by == RankBy::kAbsolute ? std::abs(ci[i]) : ci[i];
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) > key(b); });
  std::vector<std::pair<int, double>> ranked;
  ranked.reserve(order.size());
  for (int i : order) ranked.emplace_back(i, ci[i]);
  return ranked;
}

}  // namespace trustmax
