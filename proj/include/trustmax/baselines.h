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

// Ordering heuristics used as comparison points for the two solvers.

#ifndef TRUSTMAX_BASELINES_H_
#define TRUSTMAX_BASELINES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trustmax/contribution.h"
#include "trustmax/dynamics.h"
#include "trustmax/eop.h"
#include "trustmax/graph.h"
#include "trustmax/iop.h"

namespace trustmax {

enum class Problem { kIop, kEop };

enum class Heuristic {
  kRand,   // seeded random permutation
  kTrust,  // descending trust sum (column sums of |A|)
  kIo,     // ascending internal opinion
  kEo,     // ascending expressed opinion
  kIots,   // descending s_i * trust sum
};

struct HeuristicKind {
  Problem problem;
  Heuristic name;

  // iop: rand, trust, io, eo. eop: rand, io, iots.
  bool IsValid() const;
};

std::string_view ToString(Problem p);
std::string_view ToString(Heuristic h);
// Throw UsageError on unknown names.
Problem ParseProblem(std::string_view name);
Heuristic ParseHeuristic(std::string_view name);

struct RankOptions {
  std::uint64_t seed = 0;
  // Trust sums over signed instead of absolute column entries.
  bool signed_trust = false;
};

// Deterministic node order for a heuristic; ties go to the lower index.
// `z_star` is required for eo. Throws UsageError on an invalid pairing.
std::vector<int> RankNodes(const HeuristicKind& kind, const SignedTrustGraph& g,
                           const OpinionVector& s,
                           const OpinionVector* z_star,
                           const RankOptions& options = {});

// Walks `order` raising each s_i to +1 until the budget runs out; the last
// node may be raised partially. Benefit is g^T ds.
IopPlan RunIopHeuristic(std::span<const int> order, const ContributionIndex& ci,
                        const OpinionVector& s, double mu);

// Pins the first mu nodes of `order`. total_benefit = p(z*|U) - p(z*|{})
// by direct solves; per-step benefits are not filled in. `p_initial` skips
// the unpinned solve when the caller already has it.
EopPlan RunEopHeuristic(std::span<const int> order, const LaplacianSystem& ls,
                        const OpinionVector& s, int mu,
                        std::optional<double> p_initial = std::nullopt);

}  // namespace trustmax

#endif  // TRUSTMAX_BASELINES_H_
