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

#include "trustmax/baselines.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "trustmax/errors.h"
#include "trustmax/rng.h"

namespace trustmax {

bool HeuristicKind::IsValid() const {
  switch (name) {
    case Heuristic::kRand:
    case Heuristic::kIo:
      return true;
    case Heuristic::kTrust:
    case Heuristic::kEo:
      return problem == Problem::kIop;
    case Heuristic::kIots:
      return problem == Problem::kEop;
  }
  return false;
}

std::string_view ToString(Problem p) {
  return p == Problem::kIop ? "iop" : "eop";
}

std::string_view ToString(Heuristic h) {
  switch (h) {
    case Heuristic::kRand: return "rand";
    case Heuristic::kTrust: return "trust";
    case Heuristic::kIo: return "io";
    case Heuristic::kEo: return "eo";
    case Heuristic::kIots: return "iots";
  }
  return "?";
}

Problem ParseProblem(std::string_view name) {
  if (name == "iop") return Problem::kIop;
  if (name == "eop") return Problem::kEop;
  throw UsageError("unknown problem '" + std::string(name) + "'");
}

Heuristic ParseHeuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::kRand, Heuristic::kTrust, Heuristic::kIo,
                      Heuristic::kEo, Heuristic::kIots}) {
    if (ToString(h) == name) return h;
  }
  throw UsageError("unknown heuristic '" + std::string(name) + "'");
}

std::vector<int> RankNodes(const HeuristicKind& kind, const SignedTrustGraph& g,
                           const OpinionVector& s, const OpinionVector* z_star,
                           const RankOptions& options) {
  if (!kind.IsValid()) {
    throw UsageError("heuristic " + std::string(ToString(kind.name)) +
                     " is not defined for " +
                     std::string(ToString(kind.problem)));
  }
  const int n = g.num_nodes();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto sort_by = [&](auto key, bool descending) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return descending ? key(a) > key(b) : key(a) < key(b);
    });
  };
  const auto trust = [&] {
    return options.signed_trust ? g.SignedTrustSums() : g.TrustSums();
  };

  switch (kind.name) {
    case Heuristic::kRand: {
      SplitMix64 rng(options.seed);
      rng.Shuffle(order);
      break;
    }
    case Heuristic::kTrust: {
      const Eigen::VectorXd t = trust();
      sort_by([&](int i) { return t[i]; }, true);
      break;
    }
    case Heuristic::kIo:
      sort_by([&](int i) { return s[i]; }, false);
      break;
    case Heuristic::kEo:
      if (z_star == nullptr || z_star->size() != n) {
        throw UsageError("eo heuristic needs the equilibrium opinions");
      }
      sort_by([&](int i) { return (*z_star)[i]; }, false);
      break;
    case Heuristic::kIots: {
      const Eigen::VectorXd t = trust();
      sort_by([&](int i) { return s[i] * t[i]; }, true);
      break;
    }
  }
  return order;
}

IopPlan RunIopHeuristic(std::span<const int> order, const ContributionIndex& ci,
                        const OpinionVector& s, double mu) {
  const int n = s.size();
  if (ci.size() != n) throw UsageError("contribution index length mismatch");
  if (!(mu >= 0.0)) throw UsageError("budget must be nonnegative");
  IopPlan plan;
  plan.delta_s = Eigen::VectorXd::Zero(n);
  double remaining = mu;
  for (int i : order) {
    if (remaining <= 0.0) break;
    const double cost = 1.0 - s[i];
    if (cost <= 0.0) continue;
    const double amount = std::min(cost, remaining);
    plan.delta_s[i] = amount;
    plan.steps.emplace_back(i, amount);
    remaining -= amount;
  }
  plan.spent = plan.delta_s.lpNorm<1>();
  plan.benefit = ci.g.dot(plan.delta_s);
  return plan;
}

EopPlan RunEopHeuristic(std::span<const int> order, const LaplacianSystem& ls,
                        const OpinionVector& s, int mu,
                        std::optional<double> p_initial) {
  const int n = ls.num_nodes();
  if (mu < 1 || mu > n || static_cast<int>(order.size()) < mu) {
    throw UsageError("EOP budget must satisfy 1 <= mu <= n");
  }
  EopPlan plan;
  plan.pinned.assign(order.begin(), order.begin() + mu);
  plan.p_initial = p_initial ? *p_initial : PinnedOverallOpinion(ls, s, {});
  const double p_final = PinnedOverallOpinion(ls, s, plan.pinned);
  plan.total_benefit = p_final - plan.p_initial;
  plan.p_trajectory.push_back(p_final);
  return plan;
}

}  // namespace trustmax
