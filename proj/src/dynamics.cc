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

#include "trustmax/dynamics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <Eigen/LU>

#include "trustmax/errors.h"

namespace trustmax {
namespace {

std::vector<bool> PinMask(int n, std::span<const int> pinned) {
  std::vector<bool> mask(n, false);
  for (int i : pinned) {
    if (i < 0 || i >= n) {
      throw UsageError("pinned node " + std::to_string(i) + " out of range");
    }
    if (mask[i]) throw UsageError("node " + std::to_string(i) + " pinned twice");
    mask[i] = true;
  }
  return mask;
}

}  // namespace

OpinionVector OpinionVector::Internal(Eigen::VectorXd values) {
  OpinionVector s{std::move(values), OpinionKind::kInternal};
  if (!s.InRange()) {
    throw ValidationError("internal opinions must lie in [-1, 1]");
  }
  return s;
}

bool OpinionVector::InRange(double slack) const {
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!(v >= -1.0 - slack && v <= 1.0 + slack)) return false;
  }
  return true;
}

OpinionVector ReadOpinions(std::istream& in, const SignedTrustGraph& g) {
  const int n = g.num_nodes();
  Eigen::VectorXd values = Eigen::VectorXd::Zero(n);
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError(line_no, "expected node_id,value");
    }
    const std::string id = line.substr(0, comma);
    const std::string text = line.substr(comma + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError(line_no, "bad opinion value '" + text + "'");
    }
    const int i = g.IndexOf(id);
    if (i < 0) throw ParseError(line_no, "unknown node id '" + id + "'");
    if (seen[i]) throw ParseError(line_no, "node '" + id + "' given twice");
    seen[i] = true;
    values[i] = v;
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw ValidationError("no opinion given for node '" + g.label(i) + "'");
    }
  }
  return OpinionVector::Internal(std::move(values));
}

OpinionVector LoadOpinions(const std::string& path, const SignedTrustGraph& g) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return ReadOpinions(in, g);
}

void WriteOpinions(const SignedTrustGraph& g, const OpinionVector& z,
                   std::ostream& out) {
  std::ostringstream buf;
  buf.precision(17);
  for (int i = 0; i < z.size(); ++i) {
    buf << g.label(i) << ',' << z[i] << '\n';
  }
  out << buf.str();
}

OpinionVector EquilibriumDirect(const LaplacianSystem& ls,
                                const OpinionVector& s,
                                std::span<const int> pinned) {
  const int n = ls.num_nodes();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  PinMask(n, pinned);
  CheckDenseCap(n);
  const Eigen::MatrixXd system = ls.DenseSystem(pinned);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::VectorXd z = lu.solve(s.values);
  if (!z.allFinite() ||
      (system * z - s.values).lpNorm<Eigen::Infinity>() > 1e-8) {
    throw NumericalError("equilibrium solve is singular");
  }
  for (int i : pinned) z[i] = s[i];
  return OpinionVector::Expressed(std::move(z));
}

IterativeEquilibrium EquilibriumIterative(const SignedTrustGraph& g,
                                          const OpinionVector& s,
                                          std::span<const int> pinned,
                                          double tol, int max_iters) {
  const int n = g.num_nodes();
  if (s.size() != n) throw UsageError("opinion vector length mismatch");
  if (!(tol > 0.0)) throw UsageError("tol must be positive");
  if (max_iters < 1) throw UsageError("max_iters must be at least 1");
  const std::vector<bool> is_pinned = PinMask(n, pinned);

  Eigen::VectorXd z = s.values;
  Eigen::VectorXd next(n);
  double change = 0.0;
  for (int iter = 1; iter <= max_iters; ++iter) {
    change = 0.0;
    for (int i = 0; i < n; ++i) {
      if (is_pinned[i]) {
        next[i] = s[i];
        continue;
      }
      double num = s[i];
      double den = 1.0;
      for (const Edge& e : g.OutEdges(i)) {
        num += e.weight * z[e.dst];
        den += std::abs(e.weight);
      }
      next[i] = num / den;
      change = std::max(change, std::abs(next[i] - z[i]));
    }
    z.swap(next);
    if (change < tol) {
      return {OpinionVector::Expressed(std::move(z)), iter, change};
    }
  }
  throw ConvergenceError(max_iters, change);
}

double NodeCost(const SignedTrustGraph& g, const OpinionVector& s,
                const OpinionVector& z, int i) {
  const double own = z[i] - s[i];
  double cost = own * own;
  for (const Edge& e : g.OutEdges(i)) {
    const double sign = e.weight > 0.0 ? 1.0 : -1.0;
    const double gap = z[i] - sign * z[e.dst];
    cost += std::abs(e.weight) * gap * gap;
  }
  return cost;
}

double OverallOpinion(const Eigen::VectorXd& z) {
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double t = sum + z[i];
    if (std::abs(sum) >= std::abs(z[i])) {
      carry += (sum - t) + z[i];
    } else {
      carry += (z[i] - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

double OverallOpinion(const OpinionVector& z) { return OverallOpinion(z.values); }

std::size_t DenseMemoryCapBytes() {
  if (const char* env = std::getenv("TRUSTMAX_MEMCAP_MB")) {
    char* end = nullptr;
    const double mb = std::strtod(env, &end);
    if (end != env && mb > 0.0) {
      return static_cast<std::size_t>(mb * 1024.0 * 1024.0);
    }
  }
  return std::size_t{20000} * 20000 * sizeof(double);
}

void CheckDenseCap(int n) {
  const std::size_t bytes =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * sizeof(double);
  if (bytes > DenseMemoryCapBytes()) {
    throw SizeError("dense " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrix exceeds memory cap (set TRUSTMAX_MEMCAP_MB)");
  }
}

void FundamentalMatrix::AddPinned(int i) {
  pinned_.push_back(i);
  pinned_mask_[i] = true;
  fixed_rows_[i] = true;
}

FundamentalMatrix ComputeFundamentalMatrix(const LaplacianSystem& ls,
                                           std::span<const int> pinned) {
  const int n = ls.num_nodes();
  std::vector<bool> fixed = PinMask(n, pinned);
  CheckDenseCap(n);
  for (int i = 0; i < n; ++i) fixed[i] = fixed[i] || ls.IsSink(i);

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(ls.DenseSystem(pinned));
  Eigen::MatrixXd q = lu.inverse();
  if (!q.allFinite()) throw NumericalError("fundamental matrix is singular");
  // Rows of the system that are unit rows invert to unit rows exactly.
  for (int i = 0; i < n; ++i) {
    if (fixed[i]) {
      q.row(i).setZero();
      q(i, i) = 1.0;
    }
  }
  return FundamentalMatrix(std::move(q),
                           std::vector<int>(pinned.begin(), pinned.end()),
                           std::move(fixed));
}

}  // namespace trustmax
