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

// Expressed opinion problem: pick mu nodes whose expressed opinion is pinned
// to their internal opinion so that the overall opinion is largest.
//
// Pinning node i replaces row i of (Lbar_U + I) by e_i^T, a rank-one change,
// so Q^U can be updated in O(n^2):
//
//   Q' = Q + (Q e_i)(l_i Q) / (1 - l_i Q e_i),   1 - l_i Q e_i = q_ii,
//
// with l_i the original Laplacian row of i. The gain of pinning i is
//
//   b_i = (g_i / q_ii) (s_i - z_i),   g = (1^T Q)^T,  z = Q s,
//
// which costs two matrix-vector products for all candidates at once.

#ifndef TRUSTMAX_EOP_H_
#define TRUSTMAX_EOP_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trustmax/dynamics.h"
#include "trustmax/graph.h"

namespace trustmax {

inline constexpr double kPivotGuard = 1e-12;
// Benefits closer than this count as tied and go to the lower index.
inline constexpr double kArgmaxTieTol = 1e-12;

struct BenefitVector {
  Eigen::VectorXd b;
  std::vector<int> valid_for;  // the pinned set U
  // Sum of z^{U*}, the overall opinion before the next pin.
  double overall = 0.0;
};

// b = diag(g^U) diag(Q^U)^-1 (s - z^{U*}) in O(n^2); b_i = 0 for i in U.
// Throws DegeneratePivotError for an unpinned node with |q_ii| <= 1e-12.
BenefitVector ComputeBenefitVector(const FundamentalMatrix& fm,
                                   const OpinionVector& s);

// Same, but degenerate nodes are appended to `degenerate` and get
// b_i = -inf instead of throwing.
BenefitVector ComputeBenefitVector(const FundamentalMatrix& fm,
                                   const OpinionVector& s,
                                   std::vector<int>& degenerate);

// Q^{U+i} from Q^U by the rank-one update. Throws UsageError if i is pinned
// and DegeneratePivotError if the denominator is within 1e-12 of zero.
FundamentalMatrix ApplyPin(const FundamentalMatrix& fm,
                           const LaplacianSystem& ls, int i);
void ApplyPinInPlace(FundamentalMatrix& fm, const LaplacianSystem& ls, int i);

// 1 - l_i Q e_i, computed from the Laplacian row. Equals q_ii for unpinned i.
double PinDenominator(const FundamentalMatrix& fm, const LaplacianSystem& ls,
                      int i);

enum class EopMode {
  kFast,   // benefit vector + rank-one update, O(n^2) per step
  kNaive,  // per-candidate updated matrix, O(n^3) per step
};

struct EopOptions {
  EopMode mode = EopMode::kFast;
  // Stop before pinning a node whose best benefit is <= 0.
  bool stop_when_nonpositive = false;
};

struct EopPlan {
  std::vector<int> pinned;
  std::vector<double> step_benefits;
  double total_benefit = 0.0;
  double p_initial = 0.0;
  std::vector<double> p_trajectory;  // overall opinion after each step
  std::vector<double> step_seconds;  // wall time per step
  std::vector<std::string> warnings;
};

// Greedy: each step pins the unpinned node with the largest benefit (lowest
// index on ties), even when that benefit is negative. Requires 1 <= mu <= n.
EopPlan SolveEop(const LaplacianSystem& ls, const OpinionVector& s, int mu,
                 const EopOptions& options = {});

// p(z* | U) by a direct solve.
double PinnedOverallOpinion(const LaplacianSystem& ls, const OpinionVector& s,
                            std::span<const int> pinned);

// Recomputes every step by direct solves; throws ValidationError when a step
// benefit is off by more than `tol` or pins repeat.
void ValidateEopPlan(const EopPlan& plan, const LaplacianSystem& ls,
                     const OpinionVector& s, double tol = 1e-8);

struct EopOracleResult {
  std::vector<int> best_set;  // sorted ascending
  double best_benefit = 0.0;
  std::uint64_t subsets = 0;
};

inline constexpr std::uint64_t kEopOracleMaxSubsets = 1000000;

// Exhaustive search over all mu-subsets with direct solves. Throws SizeError
// when C(n, mu) exceeds 10^6.
EopOracleResult EopExhaustiveOracle(const LaplacianSystem& ls,
                                    const OpinionVector& s, int mu);

}  // namespace trustmax

#endif  // TRUSTMAX_EOP_H_
