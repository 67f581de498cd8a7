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

// Signed Friedkin-Johnsen dynamics. Each node i holds a fixed internal
// opinion s_i and repeatedly expresses
//
//   z_i = (s_i + sum_j w_ij z_j) / (1 + sum_j |w_ij|)
//
// over its out-neighbours j. The fixed point is z* = (Lbar + I)^-1 s. A
// pinned node keeps z_i = s_i, which is the same as zeroing its Lbar row.

#ifndef TRUSTMAX_DYNAMICS_H_
#define TRUSTMAX_DYNAMICS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trustmax/graph.h"

namespace trustmax {

enum class OpinionKind { kInternal, kExpressed };

struct OpinionVector {
  Eigen::VectorXd values;
  OpinionKind kind = OpinionKind::kInternal;

  // Throws ValidationError unless every entry is in [-1, 1].
  static OpinionVector Internal(Eigen::VectorXd values);
  static OpinionVector Expressed(Eigen::VectorXd values) {
    return {std::move(values), OpinionKind::kExpressed};
  }

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }

  // True when every entry lies in [-1 - slack, 1 + slack].
  bool InRange(double slack = 0.0) const;
};

// Reads `node_id,value` rows keyed by original dataset IDs. Every node of
// `g` must appear exactly once.
OpinionVector ReadOpinions(std::istream& in, const SignedTrustGraph& g);
OpinionVector LoadOpinions(const std::string& path, const SignedTrustGraph& g);
void WriteOpinions(const SignedTrustGraph& g, const OpinionVector& z,
                   std::ostream& out);

// z* with (Lbar_U + I) z* = s by pivoted LU. Pinned entries equal s exactly.
OpinionVector EquilibriumDirect(const LaplacianSystem& ls,
                                const OpinionVector& s,
                                std::span<const int> pinned = {});

inline constexpr double kDefaultIterTol = 1e-10;
inline constexpr int kDefaultMaxIters = 100000;

struct IterativeEquilibrium {
  OpinionVector z;
  int iters = 0;
  double residual = 0.0;
};

// Synchronous sweeps of the averaging update starting from z = s, until the
// max-abs change drops below `tol`. Throws ConvergenceError at `max_iters`.
IterativeEquilibrium EquilibriumIterative(const SignedTrustGraph& g,
                                          const OpinionVector& s,
                                          std::span<const int> pinned = {},
                                          double tol = kDefaultIterTol,
                                          int max_iters = kDefaultMaxIters);

// c(z_i) = (z_i - s_i)^2 + sum_j |w_ij| (z_i - sgn(w_ij) z_j)^2.
double NodeCost(const SignedTrustGraph& g, const OpinionVector& s,
                const OpinionVector& z, int i);

// p(z) = sum_i z_i, compensated summation.
double OverallOpinion(const OpinionVector& z);
double OverallOpinion(const Eigen::VectorXd& z);

// Dense n x n allocations are refused above this many bytes. Default is
// 20000^2 doubles; TRUSTMAX_MEMCAP_MB overrides it.
std::size_t DenseMemoryCapBytes();
// Throws SizeError when an n x n double matrix would exceed the cap.
void CheckDenseCap(int n);

// Q^U = (Lbar_U + I)^-1, conditioned on the pinned set U.
class FundamentalMatrix {
 public:
  FundamentalMatrix(Eigen::MatrixXd q, std::vector<int> pinned,
                    std::vector<bool> fixed_rows)
      : q_(std::move(q)),
        pinned_(std::move(pinned)),
        pinned_mask_(q_.rows(), false),
        fixed_rows_(std::move(fixed_rows)) {
    for (int i : pinned_) pinned_mask_[i] = true;
  }

  int num_nodes() const { return static_cast<int>(q_.rows()); }
  const Eigen::MatrixXd& matrix() const { return q_; }
  Eigen::MatrixXd& mutable_matrix() { return q_; }
  double operator()(int i, int j) const { return q_(i, j); }

  // Pinned nodes in the order they were added.
  const std::vector<int>& pinned() const { return pinned_; }
  bool IsPinned(int i) const { return pinned_mask_[i]; }
  void AddPinned(int i);

  // Row i of (Lbar_U + I) is e_i^T: i is pinned or has no out-edges. For
  // these nodes z*_i = s_i holds exactly.
  bool IsFixedRow(int i) const { return fixed_rows_[i]; }

 private:
  Eigen::MatrixXd q_;
  std::vector<int> pinned_;
  std::vector<bool> pinned_mask_;
  std::vector<bool> fixed_rows_;
};

// Inverts the row-replaced system. Throws SizeError over the memory cap and
// UsageError on out-of-range or repeated pins.
FundamentalMatrix ComputeFundamentalMatrix(const LaplacianSystem& ls,
                                           std::span<const int> pinned = {});

}  // namespace trustmax

#endif  // TRUSTMAX_DYNAMICS_H_
