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

#include <cmath>

#include <gtest/gtest.h>

#include "test_util.h"
#include "trustmax/errors.h"
#include "trustmax/lp.h"

namespace trustmax {
namespace {

OpinionVector S(Eigen::VectorXd v) { return OpinionVector::Internal(std::move(v)); }

TEST(SolveIop, SingleEdge) {
  const LaplacianSystem ls(SignedTrustGraph(2, {{0, 1, 1.0}}));
  const auto ci = SolveContributionIndex(ls);
  const auto s = S(Eigen::Vector2d(0, 0));
  const auto plan = SolveIop(ci, s, 1.0);
  EXPECT_EQ(plan.delta_s, Eigen::Vector2d(0, 1));
  EXPECT_NEAR(plan.benefit, 1.5, 1e-15);
  EXPECT_EQ(plan.spent, 1.0);
  EXPECT_NEAR(IopOracle(ls, s, 1.0, 5).best, 1.5, 1e-12);
}

TEST(SolveIop, ZeroBudget) {
  ContributionIndex ci{Eigen::Vector2d(0.5, 1.5), {}};
  const auto plan = SolveIop(ci, S(Eigen::Vector2d(0, 0)), 0.0);
  EXPECT_EQ(plan.delta_s, Eigen::Vector2d(0, 0));
  EXPECT_EQ(plan.benefit, 0.0);
  EXPECT_TRUE(plan.steps.empty());
}

TEST(SolveIop, ExhaustedNodeSkipped) {
  ContributionIndex ci{Eigen::Vector2d(-2, 1), {}};
  const auto plan = SolveIop(ci, S(Eigen::Vector2d(-1, 0)), 1.0);
  EXPECT_EQ(plan.delta_s, Eigen::Vector2d(0, 1));
  EXPECT_EQ(plan.benefit, 1.0);
}

TEST(SolveIop, NegativeContributionPushesDown) {
  ContributionIndex ci{Eigen::Vector2d(-2, 1), {}};
  const auto plan = SolveIop(ci, S(Eigen::Vector2d(0.5, 0)), 1.0);
  EXPECT_EQ(plan.delta_s, Eigen::Vector2d(-1, 0));
  EXPECT_EQ(plan.benefit, 2.0);
}

TEST(SolveIop, ZeroContributionStops) {
  ContributionIndex ci{Eigen::Vector3d(0, 0, 0), {}};
  const auto plan = SolveIop(ci, S(Eigen::Vector3d(0, 0, 0)), 5.0);
  EXPECT_EQ(plan.benefit, 0.0);
  EXPECT_EQ(plan.spent, 0.0);
}

TEST(SolveIop, Errors) {
  ContributionIndex ci{Eigen::Vector2d(1, 1), {}};
  EXPECT_THROW(SolveIop(ci, S(Eigen::Vector2d(0, 0)), -1.0), UsageError);
  EXPECT_THROW(SolveIop(ci, S(Eigen::Vector3d(0, 0, 0)), 1.0), UsageError);
  EXPECT_THROW(SolveIop(ci, S(Eigen::Vector2d(0, 0)), std::nan("")), UsageError);
}

TEST(SolveIop, SaturatedClosedForm) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = RandomSignedGraph(15, 0.2, seed);
    const auto ci = SolveContributionIndex(LaplacianSystem(g));
    const auto s = S(testing::UniformOpinions(15, seed));
    double need = 0.0, want = 0.0;
    for (int i = 0; i < 15; ++i) {
      if (ci[i] == 0.0) continue;
      const double sign = ci[i] > 0 ? 1.0 : -1.0;
      need += 1.0 - sign * s[i];
      want += std::abs(ci[i]) * (1.0 - sign * s[i]);
    }
    const auto plan = SolveIop(ci, s, need + 1.0);
    EXPECT_NEAR(plan.benefit, want, 1e-12);
    EXPECT_NEAR(plan.spent, need, 1e-12);
  }
}

TEST(SolveIop, Properties) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = RandomSignedGraph(25, 0.1, seed);
    const LaplacianSystem ls(g);
    const auto ci = SolveContributionIndex(ls);
    const auto s = S(testing::UniformOpinions(25, seed));
    SplitMix64 rng(seed);
    const double mu = rng.Uniform(0.0, 8.0);
    const auto plan = SolveIop(ci, s, mu);
    EXPECT_NO_THROW(ValidateIopPlan(plan, ci, s, mu));

    for (std::size_t k = 1; k < plan.steps.size(); ++k) {
      EXPECT_GE(std::abs(ci[plan.steps[k - 1].first]),
                std::abs(ci[plan.steps[k].first]));
    }
    bool headroom_left = false;
    for (int i = 0; i < 25; ++i) {
      if (ci[i] == 0.0) continue;
      const double sign = ci[i] > 0 ? 1.0 : -1.0;
      if (1.0 - sign * (s[i] + plan.delta_s[i]) > 1e-12) headroom_left = true;
    }
    if (headroom_left) EXPECT_NEAR(plan.spent, mu, 1e-12);

    const Eigen::VectorXd moved = s.values + plan.delta_s;
    const double p_after = testing::RefOverall(g, testing::ToVec(moved));
    const double p_before = testing::RefOverall(g, testing::ToVec(s.values));
    EXPECT_NEAR(p_after - p_before, plan.benefit, 1e-9);
  }
}

TEST(ValidateIopPlan, RejectsBadPlans) {
  ContributionIndex ci{Eigen::Vector2d(1, 2), {}};
  const auto s = S(Eigen::Vector2d(0.5, 0));
  IopPlan plan = SolveIop(ci, s, 1.0);
  IopPlan over = plan;
  over.delta_s[0] = 0.6;
  over.spent = over.delta_s.lpNorm<1>();
  over.benefit = ci.g.dot(over.delta_s);
  EXPECT_THROW(ValidateIopPlan(over, ci, s, 2.0), ValidationError);
  EXPECT_THROW(ValidateIopPlan(plan, ci, s, 0.5), ValidationError);
  IopPlan lie = plan;
  lie.benefit += 1.0;
  EXPECT_THROW(ValidateIopPlan(lie, ci, s, 1.0), ValidationError);
}

TEST(IopOracle, GreedyMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SplitMix64 rng(seed);
    const int n = 2 + static_cast<int>(rng.Below(7));
    const auto g = RandomSignedGraph(n, 0.3, seed);
    const LaplacianSystem ls(g);
    const auto s = S(testing::UniformOpinions(n, seed + 77));
    const double mu = rng.Uniform(0.0, 3.0);
    const auto oracle = IopOracle(ls, s, mu, 5);
    const auto plan = SolveIop(SolveContributionIndex(ls), s, mu);
    EXPECT_GE(plan.benefit, oracle.best - 1e-9) << "seed " << seed;
    EXPECT_NEAR(plan.benefit, oracle.lp_benefit, 1e-9);
    EXPECT_LE(oracle.grid_benefit, oracle.lp_benefit + 1e-9);
  }
}

TEST(IopOracle, Guards) {
  const LaplacianSystem big(SignedTrustGraph(9, {}));
  EXPECT_THROW(IopOracle(big, S(Eigen::VectorXd::Zero(9)), 1.0, 3), SizeError);
  const LaplacianSystem small(SignedTrustGraph(2, {}));
  EXPECT_THROW(IopOracle(small, S(Eigen::Vector2d(0, 0)), 1.0, 0), SizeError);
  EXPECT_THROW(IopOracle(small, S(Eigen::Vector2d(0, 0)), 1.0, 22), SizeError);
}

TEST(SolveLp, SmallProblem) {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3.
  Eigen::MatrixXd a(3, 2);
  a << 1, 1, 1, 3, 1, 0;
  const auto r = SolveLp(a, Eigen::Vector3d(4, 6, 3), Eigen::Vector2d(3, 2));
  EXPECT_TRUE(r.bounded);
  EXPECT_NEAR(r.objective, 11.0, 1e-12);
  EXPECT_NEAR(r.x[0], 3.0, 1e-12);
  EXPECT_NEAR(r.x[1], 1.0, 1e-12);
}

TEST(SolveLp, Unbounded) {
  Eigen::MatrixXd a(1, 2);
  a << 1, -1;
  EXPECT_FALSE(SolveLp(a, Eigen::VectorXd::Ones(1), Eigen::Vector2d(0, 1)).bounded);
}

}  // namespace
}  // namespace trustmax
