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

#include "trustmax/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "trustmax/errors.h"
#include "trustmax/rng.h"

namespace trustmax {
namespace {

std::string EdgeName(const std::string& src, const std::string& dst) {
  return "(" + src + "," + dst + ")";
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.push_back(Trim(line.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view field) {
  T value{};
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

SignedTrustGraph::SignedTrustGraph(int n, std::vector<Edge> edges,
                                   std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ <= 0) throw ValidationError("graph must have at least one node");
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw ValidationError("label count does not match node count");
  }
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_) {
      throw ValidationError("edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ") out of range");
    }
    if (e.src == e.dst) {
      throw ValidationError("self-loop at node " + labels_[e.src]);
    }
    if (!(e.weight >= -1.0 && e.weight <= 1.0) || e.weight == 0.0) {
      throw ValidationError("edge " +
                            EdgeName(labels_[e.src], labels_[e.dst]) +
                            " has weight outside [-1,1] or zero");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].src == edges_[k - 1].src &&
        edges_[k].dst == edges_[k - 1].dst) {
      throw ValidationError(
          "duplicate edge " +
          EdgeName(labels_[edges_[k].src], labels_[edges_[k].dst]));
    }
  }
  row_start_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) ++row_start_[e.src + 1];
  for (int i = 0; i < n_; ++i) row_start_[i + 1] += row_start_[i];
}

std::span<const Edge> SignedTrustGraph::OutEdges(int i) const {
  return std::span<const Edge>(edges_).subspan(
      row_start_[i], row_start_[i + 1] - row_start_[i]);
}

int SignedTrustGraph::IndexOf(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Eigen::VectorXd SignedTrustGraph::TrustSums() const {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n_);
  for (const Edge& e : edges_) sums[e.dst] += std::abs(e.weight);
  return sums;
}

Eigen::VectorXd SignedTrustGraph::SignedTrustSums() const {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(n_);
  for (const Edge& e : edges_) sums[e.dst] += e.weight;
  return sums;
}

SignedTrustGraph ParseEdgeList(std::istream& in, const LoadOptions& options) {
  if (options.normalize_divisor && !(*options.normalize_divisor > 0.0)) {
    throw ValidationError("normalize divisor must be positive");
  }
  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  auto intern = [&](std::string_view id) {
    auto [it, inserted] =
        index.emplace(std::string(id), static_cast<int>(labels.size()));
    if (inserted) labels.emplace_back(id);
    return it->second;
  };

  std::map<std::pair<int, int>, double> weights;
  int self_loops = 0;
  int replaced = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = SplitFields(body);

    double weight = 0.0;
    if (options.format == EdgeListFormat::kCsvTriplet) {
      if (fields.size() != 3) {
        throw ParseError(line_no, "expected src,dst,weight");
      }
      const auto w = ParseNumber<double>(fields[2]);
      if (!w) throw ParseError(line_no, "bad weight '" +
                                            std::string(fields[2]) + "'");
      weight = *w;
    } else {
      if (fields.size() < 3) {
        throw ParseError(line_no, "expected SOURCE,TARGET,RATING[,TIME]");
      }
      const auto r = ParseNumber<long long>(fields[2]);
      if (!r) throw ParseError(line_no, "bad integer rating '" +
                                            std::string(fields[2]) + "'");
      weight = static_cast<double>(*r);
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "empty node id");
    }
    if (options.normalize_divisor) weight /= *options.normalize_divisor;

    const int src = intern(fields[0]);
    const int dst = intern(fields[1]);
    const std::string name = EdgeName(labels[src], labels[dst]);
    if (!(weight >= -1.0 && weight <= 1.0) || weight == 0.0) {
      throw ValidationError("line " + std::to_string(line_no) + ": edge " +
                            name + " weight " + std::to_string(weight) +
                            " outside [-1,1] or zero");
    }
    if (src == dst) {
      if (options.self_loops == SelfLoopPolicy::kReject) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": self-loop " + name);
      }
      ++self_loops;
      continue;
    }
    auto [it, inserted] = weights.emplace(std::pair(src, dst), weight);
    if (!inserted) {
      if (options.duplicates == DuplicatePolicy::kReject) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": duplicate edge " + name);
      }
      it->second = weight;
      ++replaced;
    }
  }
  if (labels.empty()) throw ValidationError("edge list has no nodes");

  std::vector<Edge> edges;
  edges.reserve(weights.size());
  for (const auto& [key, w] : weights) edges.push_back({key.first, key.second, w});
  const int n = static_cast<int>(labels.size());
  SignedTrustGraph g(n, std::move(edges), std::move(labels));
  g.self_loops_dropped = self_loops;
  g.duplicates_replaced = replaced;
  return g;
}

SignedTrustGraph LoadEdgeList(const std::string& path,
                              const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return ParseEdgeList(in, options);
}

void WriteEdgeList(const SignedTrustGraph& g, std::ostream& out) {
  std::ostringstream buf;
  buf.precision(17);
  for (const Edge& e : g.edges()) {
    buf << g.label(e.src) << ',' << g.label(e.dst) << ',' << e.weight << '\n';
  }
  out << buf.str();
}

SignedTrustGraph RandomSignedGraph(int n, double edge_prob,
                                   std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !rng.Bernoulli(edge_prob)) continue;
      double w = 0.0;
      while (w == 0.0) w = rng.Uniform(-1.0, 1.0);
      edges.push_back({i, j, w});
    }
  }
  return SignedTrustGraph(n, std::move(edges));
}

LaplacianSystem::LaplacianSystem(const SignedTrustGraph& g)
    : n_(g.num_nodes()),
      adjacency_(n_, n_),
      degree_(Eigen::VectorXd::Zero(n_)),
      laplacian_(n_, n_) {
  std::vector<Eigen::Triplet<double>> a;
  std::vector<Eigen::Triplet<double>> l;
  a.reserve(g.num_edges());
  l.reserve(g.num_edges() + n_);
  for (const Edge& e : g.edges()) {
    a.emplace_back(e.src, e.dst, e.weight);
    l.emplace_back(e.src, e.dst, -e.weight);
    degree_[e.src] += std::abs(e.weight);
  }
  for (int i = 0; i < n_; ++i) {
    if (degree_[i] != 0.0) l.emplace_back(i, i, degree_[i]);
  }
  adjacency_.setFromTriplets(a.begin(), a.end());
  laplacian_.setFromTriplets(l.begin(), l.end());
  adjacency_.makeCompressed();
  laplacian_.makeCompressed();
}

Eigen::MatrixXd LaplacianSystem::DenseLaplacian() const {
  return Eigen::MatrixXd(laplacian_);
}

Eigen::MatrixXd LaplacianSystem::DenseSystem(std::span<const int> pinned) const {
  Eigen::MatrixXd m = DenseLaplacian();
  m.diagonal().array() += 1.0;
  for (int i : pinned) {
    if (i < 0 || i >= n_) throw UsageError("pinned node out of range");
    m.row(i).setZero();
    m(i, i) = 1.0;
  }
  return m;
}

SpectralReport SpectralCheck(const LaplacianSystem& ls, double tol,
                             int max_nodes) {
  const int n = ls.num_nodes();
  if (n > max_nodes) {
    throw SizeError("spectral check refused: n=" + std::to_string(n) +
                    " exceeds cap " + std::to_string(max_nodes));
  }
  const Eigen::MatrixXd lbar = ls.DenseLaplacian();
  const Eigen::MatrixXd sym = 0.5 * (lbar + lbar.transpose());

  Eigen::EigenSolver<Eigen::MatrixXd> general(lbar, /*computeEigenvectors=*/false);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> symmetric(
      sym, Eigen::EigenvaluesOnly);
  if (general.info() != Eigen::Success || symmetric.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed");
  }
  const Eigen::VectorXd re = general.eigenvalues().real();

  SpectralReport report;
  report.min_re = re.minCoeff();
  report.max_re = re.maxCoeff();
  report.bound_lo = symmetric.eigenvalues().minCoeff();
  report.bound_hi = symmetric.eigenvalues().maxCoeff();
  report.symmetric_part_psd = report.bound_lo >= -tol;
  report.ok = report.min_re >= -tol &&
              report.min_re >= report.bound_lo - tol &&
              report.max_re <= report.bound_hi + tol;
  return report;
}

}  // namespace trustmax
