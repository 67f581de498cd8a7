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

#include "trustmax/iop.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/LU>

#include "trustmax/errors.h"
#include "trustmax/lp.h"

namespace trustmax {

IopPlan SolveIop(const ContributionIndex& ci, const OpinionVector& s,
                 double mu) {
  const int n = ci.size();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  if (!(mu >= 0.0)) throw UsageError("budget must be nonnegative");
  if (!s.InRange()) throw ValidationError("internal opinions out of range");

  IopPlan plan;
  plan.delta_s = Eigen::VectorXd::Zero(n);
  double remaining = mu;
  for (const auto& [i, g] : RankByContribution(ci, RankBy::kAbsolute)) {
    if (remaining <= 0.0 || g == 0.0) break;
    const double sign = g > 0.0 ? 1.0 : -1.0;
    const double cost = 1.0 - sign * s[i];
    if (cost <= 0.0) continue;  // already at the bound it would move toward
    const double amount = std::min(cost, remaining);
    plan.delta_s[i] = sign * amount;
    plan.steps.emplace_back(i, sign * amount);
    remaining -= amount;
  }
  plan.spent = plan.delta_s.lpNorm<1>();
  plan.benefit = ci.g.dot(plan.delta_s);
  return plan;
}

void ValidateIopPlan(const IopPlan& plan, const ContributionIndex& ci,
                     const OpinionVector& s, double mu) {
  const int n = s.size();
  if (plan.delta_s.size() != n) throw ValidationError("plan length mismatch");
  for (int i = 0; i < n; ++i) {
    const double v = s[i] + plan.delta_s[i];
    if (v < -1.0 - 1e-12 || v > 1.0 + 1e-12) {
      throw ValidationError("plan pushes node " + std::to_string(i) +
                            " outside [-1, 1]");
    }
  }
  const double spent = plan.delta_s.lpNorm<1>();
  if (spent > mu + 1e-12) throw ValidationError("plan exceeds budget");
  if (std::abs(spent - plan.spent) > 1e-12) {
    throw ValidationError("plan spent does not match delta_s");
  }
  if (std::abs(ci.g.dot(plan.delta_s) - plan.benefit) > 1e-10) {
    throw ValidationError("plan benefit does not match g^T delta_s");
  }
}

IopOracleResult IopOracle(const LaplacianSystem& ls, const OpinionVector& s,
                          double mu, int grid) {
  const int n = ls.num_nodes();
  if (n > kIopOracleMaxNodes) {
    throw SizeError("IOP oracle needs n <= " +
                    std::to_string(kIopOracleMaxNodes));
  }
  if (grid < 1 || grid > kIopOracleMaxGrid) {
    throw SizeError("IOP oracle grid must be in [1, " +
                    std::to_string(kIopOracleMaxGrid) + "]");
  }
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  if (!(mu >= 0.0)) throw UsageError("budget must be nonnegative");

  Eigen::FullPivLU<Eigen::MatrixXd> lu(ls.DenseSystem());
  const Eigen::VectorXd g = lu.inverse().colwise().sum().transpose();

  IopOracleResult result;

  // Grid search over signed unit splits.
  const int units = grid - 1;
  const double unit = units > 0 ? mu / units : 0.0;
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(n);
  double best_grid = 0.0;
  std::function<void(int, int)> search = [&](int node, int left) {
    if (node == n) {
      best_grid = std::max(best_grid, g.dot(delta));
      return;
    }
    delta[node] = 0.0;
    search(node + 1, left);
    for (int k = 1; k <= left; ++k) {
      for (const double sign : {1.0, -1.0}) {
        const double headroom = 1.0 - sign * s[node];
        if (headroom <= 0.0) continue;
        delta[node] = sign * std::min(k * unit, headroom);
        search(node + 1, left - k);
      }
    }
    delta[node] = 0.0;
  };
  search(0, units);
  result.grid_benefit = best_grid;

  // LP in (up_i, down_i) >= 0: up_i <= 1 - s_i, down_i <= 1 + s_i,
  // sum(up + down) <= mu; objective g^T (up - down).
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2 * n + 1, 2 * n);
  Eigen::VectorXd b(2 * n + 1);
  Eigen::VectorXd c(2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    b[i] = std::max(0.0, 1.0 - s[i]);
    a(n + i, n + i) = 1.0;
    b[n + i] = std::max(0.0, 1.0 + s[i]);
    c[i] = g[i];
    c[n + i] = -g[i];
  }
  a.row(2 * n).setOnes();
  b[2 * n] = mu;
  const LpResult lp = SolveLp(a, b, c);
  result.lp_benefit = lp.objective;

  result.best = std::max(result.grid_benefit, result.lp_benefit);
  return result;
}

}  // namespace trustmax
