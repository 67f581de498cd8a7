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

// Directed signed weighted trust graphs and their generalized Laplacian.
//
// An edge (i, j, w) means node i listens to node j with strength |w|; w > 0
// is trust and w < 0 is distrust. Node i's update therefore reads its
// out-neighbours, and the row of the Laplacian belonging to i holds i's
// out-edges.

#ifndef TRUSTMAX_GRAPH_H_
#define TRUSTMAX_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace trustmax {

using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class EdgeListFormat { kCsvTriplet, kSnapRating };
enum class SelfLoopPolicy { kReject, kDrop };
enum class DuplicatePolicy { kReject, kKeepLast };

struct LoadOptions {
  EdgeListFormat format = EdgeListFormat::kCsvTriplet;
  std::optional<double> normalize_divisor;
  SelfLoopPolicy self_loops = SelfLoopPolicy::kDrop;
  DuplicatePolicy duplicates = DuplicatePolicy::kKeepLast;
};

class SignedTrustGraph {
 public:
  SignedTrustGraph() = default;

  // Validates every invariant; throws ValidationError on the first
  // violation. Edges are stored sorted by (src, dst). `labels`, when given,
  // must have exactly n entries; otherwise labels are the indices.
  SignedTrustGraph(int n, std::vector<Edge> edges,
                   std::vector<std::string> labels = {});

  int num_nodes() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edges leaving i (the nodes i listens to), sorted by dst.
  std::span<const Edge> OutEdges(int i) const;

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of an original dataset ID, or -1.
  int IndexOf(const std::string& label) const;

  // Column sums of |A|: total absolute weight of edges pointing at each node.
  Eigen::VectorXd TrustSums() const;
  // Column sums of A (signed).
  Eigen::VectorXd SignedTrustSums() const;

  // Bookkeeping from loading.
  int self_loops_dropped = 0;
  int duplicates_replaced = 0;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> row_start_;
  std::vector<std::string> labels_;
};

SignedTrustGraph ParseEdgeList(std::istream& in, const LoadOptions& options);
SignedTrustGraph LoadEdgeList(const std::string& path,
                              const LoadOptions& options);

// Canonical csv_triplet: `src,dst,weight` with original labels, edges sorted
// by (src, dst) index, weights printed with round-trip precision.
void WriteEdgeList(const SignedTrustGraph& g, std::ostream& out);

// Erdos-Renyi style directed graph: each ordered pair (i, j), i != j, is an
// edge with probability `edge_prob`; weights are U(-1, 1) excluding 0.
SignedTrustGraph RandomSignedGraph(int n, double edge_prob, std::uint64_t seed);

// A, D and Lbar = D - A. Immutable after construction.
class LaplacianSystem {
 public:
  explicit LaplacianSystem(const SignedTrustGraph& g);

  int num_nodes() const { return n_; }
  const SparseRowMatrix& adjacency() const { return adjacency_; }
  // d_ii = sum_j |a_ij|.
  const Eigen::VectorXd& degree() const { return degree_; }
  const SparseRowMatrix& laplacian() const { return laplacian_; }

  // True when row i of Lbar is zero, i.e. node i has no out-edges.
  bool IsSink(int i) const { return degree_[i] == 0.0; }

  // (Lbar_U + I) with the rows of `pinned` replaced by unit rows.
  Eigen::MatrixXd DenseSystem(std::span<const int> pinned = {}) const;

  Eigen::MatrixXd DenseLaplacian() const;

 private:
  int n_;
  SparseRowMatrix adjacency_;
  Eigen::VectorXd degree_;
  SparseRowMatrix laplacian_;
};

inline LaplacianSystem BuildLaplacian(const SignedTrustGraph& g) {
  return LaplacianSystem(g);
}

struct SpectralReport {
  double min_re = 0.0;    // min real part over sp(Lbar)
  double max_re = 0.0;
  double bound_lo = 0.0;  // min sp(Lbar_u)
  double bound_hi = 0.0;  // max sp(Lbar_u)
  // min sp(Lbar_u) >= -tol. Fails on many directed graphs, e.g. a single
  // edge 0 -> 1, so it is reported but not part of `ok`.
  bool symmetric_part_psd = false;
  // bound_lo - tol <= Re sp(Lbar) <= bound_hi + tol and min_re >= -tol.
  bool ok = false;
};

inline constexpr int kDefaultSpectralCap = 2000;

// Checks min sp(Lbar_u) <= Re sp(Lbar) <= max sp(Lbar_u) and Re sp(Lbar) >= 0
// with slack `tol`, where Lbar_u is the symmetric part of Lbar. The latter
// makes every eigenvalue of Lbar + I have real part >= 1. Dense eigensolve;
// throws SizeError above `max_nodes`.
SpectralReport SpectralCheck(const LaplacianSystem& ls, double tol,
                             int max_nodes = kDefaultSpectralCap);

}  // namespace trustmax

#endif  // TRUSTMAX_GRAPH_H_
