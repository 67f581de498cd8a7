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

#include "trustmax/eop.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "trustmax/errors.h"

namespace trustmax {
namespace {

// l_i Q as a row vector, using the sparse Laplacian row.
Eigen::RowVectorXd LaplacianRowTimes(const LaplacianSystem& ls,
                                     const Eigen::MatrixXd& q, int i) {
  Eigen::RowVectorXd r = Eigen::RowVectorXd::Zero(q.cols());
  for (SparseRowMatrix::InnerIterator it(ls.laplacian(), i); it; ++it) {
    r.noalias() += it.value() * q.row(it.col());
  }
  return r;
}

BenefitVector BenefitImpl(const FundamentalMatrix& fm, const OpinionVector& s,
                          std::vector<int>* degenerate) {
  const Eigen::MatrixXd& q = fm.matrix();
  const Eigen::Index n = q.rows();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");

  // One pass over Q: column sums give g, accumulated columns give z = Q s.
  Eigen::VectorXd g(n);
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double* col = q.col(j).data();
    const double sj = s[j];
    double* zp = z.data();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      sum += col[i];
      zp[i] += col[i] * sj;
    }
    g[j] = sum;
  }

  BenefitVector out;
  out.b = Eigen::VectorXd::Zero(n);
  out.valid_for = fm.pinned();
  out.overall = OverallOpinion(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (fm.IsFixedRow(static_cast<int>(i))) continue;  // z_i = s_i exactly
    const double qii = q(i, i);
    if (!(std::abs(qii) > kPivotGuard)) {
      if (degenerate == nullptr) {
        throw DegeneratePivotError(static_cast<int>(i), qii);
      }
      degenerate->push_back(static_cast<int>(i));
      out.b[i] = -std::numeric_limits<double>::infinity();
      continue;
    }
    out.b[i] = g[i] / qii * (s[i] - z[i]);
  }
  return out;
}

// Lowest index wins unless a later candidate beats it by more than the tie
// tolerance.
int ArgmaxCandidate(const Eigen::VectorXd& b, const FundamentalMatrix& fm,
                    const std::vector<bool>& excluded) {
  int best = -1;
  for (int i = 0; i < b.size(); ++i) {
    if (excluded[i] || fm.IsPinned(i) || std::isinf(b[i])) continue;
    if (best < 0 || b[i] > b[best] + kArgmaxTieTol) best = i;
  }
  return best;
}

}  // namespace

BenefitVector ComputeBenefitVector(const FundamentalMatrix& fm,
                                   const OpinionVector& s) {
  return BenefitImpl(fm, s, nullptr);
}

BenefitVector ComputeBenefitVector(const FundamentalMatrix& fm,
                                   const OpinionVector& s,
                                   std::vector<int>& degenerate) {
  return BenefitImpl(fm, s, &degenerate);
}

double PinDenominator(const FundamentalMatrix& fm, const LaplacianSystem& ls,
                      int i) {
  return 1.0 - LaplacianRowTimes(ls, fm.matrix(), i)[i];
}

void ApplyPinInPlace(FundamentalMatrix& fm, const LaplacianSystem& ls, int i) {
  const int n = fm.num_nodes();
  if (i < 0 || i >= n) throw UsageError("pin target out of range");
  if (fm.IsPinned(i)) {
    throw UsageError("node " + std::to_string(i) + " is already pinned");
  }
  if (ls.IsSink(i)) {
    // Zero Laplacian row: the system does not change.
    fm.AddPinned(i);
    return;
  }
  Eigen::MatrixXd& q = fm.mutable_matrix();
  const Eigen::RowVectorXd r = LaplacianRowTimes(ls, q, i);
  const double den = 1.0 - r[i];
  if (!(std::abs(den) > kPivotGuard)) throw DegeneratePivotError(i, den);
  const Eigen::VectorXd u = q.col(i) / den;
  q.noalias() += u * r;
  q.row(i).setZero();
  q(i, i) = 1.0;
  fm.AddPinned(i);
}

FundamentalMatrix ApplyPin(const FundamentalMatrix& fm,
                           const LaplacianSystem& ls, int i) {
  FundamentalMatrix next = fm;
  ApplyPinInPlace(next, ls, i);
  return next;
}

double PinnedOverallOpinion(const LaplacianSystem& ls, const OpinionVector& s,
                            std::span<const int> pinned) {
  return OverallOpinion(EquilibriumDirect(ls, s, pinned));
}

namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void RecordStep(EopPlan& plan, int node, double benefit, double seconds) {
  const double p_before =
      plan.p_trajectory.empty() ? plan.p_initial : plan.p_trajectory.back();
  plan.pinned.push_back(node);
  plan.step_benefits.push_back(benefit);
  plan.p_trajectory.push_back(p_before + benefit);
  plan.total_benefit += benefit;
  plan.step_seconds.push_back(seconds);
}

EopPlan SolveFast(const LaplacianSystem& ls, const OpinionVector& s, int mu,
                  bool stop_when_nonpositive) {
  const int n = ls.num_nodes();
  EopPlan plan;
  FundamentalMatrix fm = ComputeFundamentalMatrix(ls);
  std::vector<bool> excluded(n, false);
  bool have_initial = false;
  while (static_cast<int>(plan.pinned.size()) < mu) {
    const auto start = Clock::now();
    std::vector<int> degenerate;
    const BenefitVector bv = ComputeBenefitVector(fm, s, degenerate);
    if (!have_initial) {
      plan.p_initial = bv.overall;
      have_initial = true;
    }
    for (int i : degenerate) {
      plan.warnings.push_back("skipped node " + std::to_string(i) +
                              ": degenerate pivot");
    }
    const int pick = ArgmaxCandidate(bv.b, fm, excluded);
    if (pick < 0) break;
    if (stop_when_nonpositive && bv.b[pick] <= 0.0) break;
    try {
      ApplyPinInPlace(fm, ls, pick);
    } catch (const DegeneratePivotError& e) {
      plan.warnings.push_back(std::string("skipped candidate: ") + e.what());
      excluded[pick] = true;
      continue;
    }
    RecordStep(plan, pick, bv.b[pick], SecondsSince(start));
  }
  return plan;
}

EopPlan SolveNaive(const LaplacianSystem& ls, const OpinionVector& s, int mu,
                   bool stop_when_nonpositive) {
  const int n = ls.num_nodes();
  EopPlan plan;
  std::vector<bool> excluded(n, false);
  Eigen::MatrixXd candidate(n, n);
  bool have_initial = false;
  while (static_cast<int>(plan.pinned.size()) < mu) {
    const auto start = Clock::now();
    const FundamentalMatrix fm = ComputeFundamentalMatrix(ls, plan.pinned);
    const Eigen::MatrixXd& q = fm.matrix();
    const double p_before = OverallOpinion(q * s.values);
    if (!have_initial) {
      plan.p_initial = p_before;
      have_initial = true;
    }
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (fm.IsPinned(i) || fm.IsFixedRow(i)) continue;
      const Eigen::RowVectorXd r = LaplacianRowTimes(ls, q, i);
      const double den = 1.0 - r[i];
      if (!(std::abs(den) > kPivotGuard)) {
        plan.warnings.push_back("skipped node " + std::to_string(i) +
                                ": degenerate pivot");
        b[i] = -std::numeric_limits<double>::infinity();
        continue;
      }
      candidate = q;
      candidate.noalias() += (q.col(i) / den) * r;
      b[i] = OverallOpinion(candidate * s.values) - p_before;
    }
    const int pick = ArgmaxCandidate(b, fm, excluded);
    if (pick < 0) break;
    if (stop_when_nonpositive && b[pick] <= 0.0) break;
    RecordStep(plan, pick, b[pick], SecondsSince(start));
  }
  return plan;
}

}  // namespace

EopPlan SolveEop(const LaplacianSystem& ls, const OpinionVector& s, int mu,
                 const EopOptions& options) {
  const int n = ls.num_nodes();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  if (mu < 1 || mu > n) {
    throw UsageError("EOP budget must satisfy 1 <= mu <= n");
  }
  return options.mode == EopMode::kFast
             ? SolveFast(ls, s, mu, options.stop_when_nonpositive)
             : SolveNaive(ls, s, mu, options.stop_when_nonpositive);
}

void ValidateEopPlan(const EopPlan& plan, const LaplacianSystem& ls,
                     const OpinionVector& s, double tol) {
  if (plan.pinned.size() != plan.step_benefits.size()) {
    throw ValidationError("plan step count mismatch");
  }
  std::vector<int> prefix;
  double p_prev = PinnedOverallOpinion(ls, s, prefix);
  if (std::abs(p_prev - plan.p_initial) > tol) {
    throw ValidationError("plan initial overall opinion is off");
  }
  for (std::size_t t = 0; t < plan.pinned.size(); ++t) {
    if (std::find(prefix.begin(), prefix.end(), plan.pinned[t]) !=
        prefix.end()) {
      throw ValidationError("plan pins a node twice");
    }
    prefix.push_back(plan.pinned[t]);
    const double p = PinnedOverallOpinion(ls, s, prefix);
    if (std::abs((p - p_prev) - plan.step_benefits[t]) > tol) {
      throw ValidationError("step " + std::to_string(t + 1) +
                            " benefit disagrees with direct solve");
    }
    p_prev = p;
  }
}

EopOracleResult EopExhaustiveOracle(const LaplacianSystem& ls,
                                    const OpinionVector& s, int mu) {
  const int n = ls.num_nodes();
  if (mu < 1 || mu > n) throw UsageError("need 1 <= mu <= n");
  // C(n, mu) with early exit past the cap.
  std::uint64_t count = 1;
  for (int k = 1; k <= mu; ++k) {
    count = count * static_cast<std::uint64_t>(n - mu + k) / k;
    if (count > kEopOracleMaxSubsets) {
      throw SizeError("exhaustive EOP oracle refused: too many subsets");
    }
  }

  const double p_empty = PinnedOverallOpinion(ls, s, {});
  EopOracleResult result;
  std::vector<int> subset(mu);
  for (int k = 0; k < mu; ++k) subset[k] = k;
  bool first = true;
  while (true) {
    const double benefit = PinnedOverallOpinion(ls, s, subset) - p_empty;
    ++result.subsets;
    if (first || benefit > result.best_benefit) {
      result.best_benefit = benefit;
      result.best_set = subset;
      first = false;
    }
    // Next combination in lexicographic order.
    int k = mu - 1;
    while (k >= 0 && subset[k] == n - mu + k) --k;
    if (k < 0) break;
    ++subset[k];
    for (int m = k + 1; m < mu; ++m) subset[m] = subset[m - 1] + 1;
  }
  return result;
}

}  // namespace trustmax
