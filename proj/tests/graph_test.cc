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

#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "test_util.h"
#include "trustmax/errors.h"

namespace trustmax {
namespace {

SignedTrustGraph Parse(const std::string& text, LoadOptions opts = {}) {
  std::istringstream in(text);
  return ParseEdgeList(in, opts);
}

void ExpectDense(const Eigen::MatrixXd& got, const testing::Mat& want) {
  ASSERT_EQ(got.rows(), static_cast<int>(want.size()));
  for (int i = 0; i < got.rows(); ++i) {
    for (int j = 0; j < got.cols(); ++j) {
      EXPECT_DOUBLE_EQ(got(i, j), want[i][j]) << i << "," << j;
    }
  }
}

TEST(ParseEdgeList, CsvTriplet) {
  const auto g = Parse("1,2,0.5\n2,1,-0.25\n");
  EXPECT_EQ(g.num_nodes(), 2);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 0.5}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 0, -0.25}));
  EXPECT_EQ(g.label(0), "1");
  EXPECT_EQ(g.IndexOf("2"), 1);
  EXPECT_EQ(g.IndexOf("9"), -1);
}

TEST(ParseEdgeList, SnapRatingNormalized) {
  LoadOptions opts;
  opts.format = EdgeListFormat::kSnapRating;
  opts.normalize_divisor = 10;
  const auto g = Parse("7188,1,10,1407470400\n1,7188,-3,1407470401\n", opts);
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0].weight, 1.0);
  EXPECT_DOUBLE_EQ(g.edges()[1].weight, -0.3);
}

TEST(ParseEdgeList, SnapRatingWithoutDivisorIsOutOfRange) {
  LoadOptions opts;
  opts.format = EdgeListFormat::kSnapRating;
  EXPECT_THROW(Parse("7188,1,10,1407470400\n", opts), ValidationError);
}

TEST(ParseEdgeList, SelfLoopDropped) {
  const auto g = Parse("1,1,0.5\n");
  EXPECT_EQ(g.num_nodes(), 1);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.self_loops_dropped, 1);
}

TEST(ParseEdgeList, SelfLoopRejected) {
  LoadOptions opts;
  opts.self_loops = SelfLoopPolicy::kReject;
  EXPECT_THROW(Parse("1,1,0.5\n", opts), ValidationError);
}

TEST(ParseEdgeList, Duplicates) {
  const auto g = Parse("a,b,0.5\na,b,-0.5\n");
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0].weight, -0.5);
  EXPECT_EQ(g.duplicates_replaced, 1);

  LoadOptions opts;
  opts.duplicates = DuplicatePolicy::kReject;
  EXPECT_THROW(Parse("a,b,0.5\na,b,-0.5\n", opts), ValidationError);
}

TEST(ParseEdgeList, CommentsAndBlankLines) {
  const auto g = Parse("# header\n\n a , b , 0.5 \n");
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(ParseEdgeList, Errors) {
  try {
    Parse("a,b,0.5\na,b\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(Parse("a,b,x\n"), ParseError);
  EXPECT_THROW(Parse("a,b,1.5\n"), ValidationError);
  EXPECT_THROW(Parse("a,b,0\n"), ValidationError);
  EXPECT_THROW(Parse("a,b,nan\n"), DataError);
  EXPECT_THROW(Parse("# nothing\n"), ValidationError);
  LoadOptions bad;
  bad.normalize_divisor = 0.0;
  EXPECT_THROW(Parse("a,b,0.5\n", bad), ValidationError);
  EXPECT_THROW(LoadEdgeList("/nonexistent/edges.csv", {}), DataError);
}

TEST(SignedTrustGraph, ConstructorValidates) {
  EXPECT_THROW(SignedTrustGraph(0, {}), ValidationError);
  EXPECT_THROW(SignedTrustGraph(2, {{0, 2, 0.5}}), ValidationError);
  EXPECT_THROW(SignedTrustGraph(2, {{0, 0, 0.5}}), ValidationError);
  EXPECT_THROW(SignedTrustGraph(2, {{0, 1, 0.5}, {0, 1, 0.2}}), ValidationError);
  EXPECT_THROW(SignedTrustGraph(2, {{0, 1, -1.01}}), ValidationError);
}

TEST(SignedTrustGraph, TrustSums) {
  const SignedTrustGraph g(3, {{0, 2, 1.0}, {1, 2, -1.0}});
  EXPECT_EQ(g.TrustSums(), Eigen::Vector3d(0, 0, 2));
  EXPECT_EQ(g.SignedTrustSums(), Eigen::Vector3d(0, 0, 0));
  EXPECT_EQ(g.OutEdges(0).size(), 1u);
  EXPECT_EQ(g.OutEdges(2).size(), 0u);
}

TEST(WriteEdgeList, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = RandomSignedGraph(30, 0.1, seed);
    std::ostringstream out;
    WriteEdgeList(g, out);
    const auto h = Parse(out.str());
    auto keyed = [](const SignedTrustGraph& x) {
      std::map<std::pair<std::string, std::string>, double> m;
      for (const Edge& e : x.edges()) m[{x.label(e.src), x.label(e.dst)}] = e.weight;
      return m;
    };
    EXPECT_EQ(keyed(g), keyed(h));
  }
}

TEST(RandomSignedGraph, Deterministic) {
  const auto a = RandomSignedGraph(40, 0.2, 7);
  const auto b = RandomSignedGraph(40, 0.2, 7);
  EXPECT_EQ(a.edges(), b.edges());
  for (const Edge& e : a.edges()) EXPECT_NE(e.weight, 0.0);
}

TEST(Laplacian, SingleTrustEdge) {
  const LaplacianSystem ls(SignedTrustGraph(2, {{0, 1, 1.0}}));
  ExpectDense(ls.DenseLaplacian(), {{1, -1}, {0, 0}});
  EXPECT_FALSE(ls.IsSink(0));
  EXPECT_TRUE(ls.IsSink(1));
}

TEST(Laplacian, SingleDistrustEdge) {
  const LaplacianSystem ls(SignedTrustGraph(2, {{0, 1, -1.0}}));
  ExpectDense(ls.DenseLaplacian(), {{1, 1}, {0, 0}});
}

TEST(Laplacian, TrusterAndDistruster) {
  const LaplacianSystem ls(SignedTrustGraph(3, {{1, 0, 1.0}, {2, 0, -1.0}}));
  ExpectDense(ls.DenseLaplacian(), {{0, 0, 0}, {-1, 1, 0}, {1, 0, 1}});
}

TEST(Laplacian, MatchesReferenceAndDegreeRebuild) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = RandomSignedGraph(25, 0.15, seed);
    const LaplacianSystem ls(g);
    const auto ref = testing::RefSystem(g);
    const Eigen::MatrixXd sys = ls.DenseSystem();
    for (int i = 0; i < 25; ++i) {
      for (int j = 0; j < 25; ++j) EXPECT_NEAR(sys(i, j), ref[i][j], 1e-12);
    }
    const Eigen::MatrixXd a(ls.adjacency());
    for (int i = 0; i < 25; ++i) {
      EXPECT_NEAR(a.row(i).cwiseAbs().sum(), ls.degree()[i], 1e-12);
    }
  }
}

TEST(Laplacian, DenseSystemPinnedRows) {
  const LaplacianSystem ls(testing::CycleFixture());
  const std::vector<int> pinned = {2};
  const Eigen::MatrixXd m = ls.DenseSystem(pinned);
  EXPECT_EQ(m.row(2), Eigen::RowVector4d(0, 0, 1, 0));
  EXPECT_THROW(ls.DenseSystem(std::vector<int>{4}), UsageError);
}

TEST(SpectralCheck, EmptyGraph) {
  const auto r = SpectralCheck(LaplacianSystem(SignedTrustGraph(1, {})), 1e-8);
  EXPECT_EQ(r.min_re, 0.0);
  EXPECT_EQ(r.bound_lo, 0.0);
  EXPECT_EQ(r.bound_hi, 0.0);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.symmetric_part_psd);
}

TEST(SpectralCheck, SingleEdge) {
  const auto r =
      SpectralCheck(LaplacianSystem(SignedTrustGraph(2, {{0, 1, 1.0}})), 1e-8);
  EXPECT_NEAR(r.min_re, 0.0, 1e-12);
  EXPECT_NEAR(r.max_re, 1.0, 1e-12);
  EXPECT_NEAR(r.bound_lo, (1.0 - std::sqrt(2.0)) / 2.0, 1e-12);
  EXPECT_NEAR(r.bound_hi, (1.0 + std::sqrt(2.0)) / 2.0, 1e-12);
  EXPECT_TRUE(r.ok);
  // The symmetric part is indefinite here even though Re sp(L) >= 0.
  EXPECT_FALSE(r.symmetric_part_psd);
}

TEST(SpectralCheck, RandomGraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    const int n = 2 + static_cast<int>(rng.Below(49));
    const LaplacianSystem ls(RandomSignedGraph(n, 0.2, seed));
    const auto r = SpectralCheck(ls, 1e-8);
    EXPECT_TRUE(r.ok) << "seed " << seed;
    EXPECT_LE(r.bound_lo, r.min_re + 1e-8);
    EXPECT_GE(r.bound_hi, r.max_re - 1e-8);

    Eigen::EigenSolver<Eigen::MatrixXd> es(ls.DenseSystem(), false);
    EXPECT_GE(es.eigenvalues().real().minCoeff(), 1.0 - 1e-8);
  }
}

TEST(SpectralCheck, SizeCap) {
  const LaplacianSystem ls(SignedTrustGraph(5, {}));
  EXPECT_THROW(SpectralCheck(ls, 1e-8, 4), SizeError);
}

}  // namespace
}  // namespace trustmax
