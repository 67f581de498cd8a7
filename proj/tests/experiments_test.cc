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

#include "trustmax/experiments.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.h"
#include "trustmax/errors.h"
#include "trustmax/sampling.h"
#include "trustmax/svg.h"

namespace trustmax {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("trustmax_test_" + name);
  fs::remove_all(dir);
  return dir;
}

// Max distance between the empirical CDF of `x` and U(0, 1).
double KsUniform(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max({d, (i + 1) / n - x[i], x[i] - i / n});
  }
  return d;
}

TEST(Distributions, Parse) {
  EXPECT_EQ(ParseDistribution("pow2", 0).alpha, 2.0);
  EXPECT_EQ(ParseDistribution("pow2.5", 0).Name(), "pow2.5");
  EXPECT_EQ(ParseDistribution("degree", 0).kind,
            DistributionKind::kDegreeCorrelated);
  EXPECT_THROW(ParseDistribution("pow", 0), UsageError);
  EXPECT_THROW(ParseDistribution("pow-1", 0), UsageError);
  EXPECT_THROW(ParseDistribution("cauchy", 0), UsageError);
  for (const auto& name : StandardDistributionNames()) {
    EXPECT_EQ(ParseDistribution(name, 0).Name(), name);
  }
}

TEST(SampleOpinions, Uniform) {
  const SignedTrustGraph g(100000, {});
  const auto s = SampleOpinions(ParseDistribution("uniform", 5), g);
  EXPECT_LT(s.values.maxCoeff(), 1.0);
  EXPECT_GT(s.values.minCoeff(), -1.0);
  EXPECT_LT(std::abs(s.values.mean()), 0.02);
}

TEST(SampleOpinions, PowerLawOneIsUniformMagnitude) {
  const SignedTrustGraph g(100000, {});
  const auto s = SampleOpinions(ParseDistribution("pow1", 6), g);
  std::vector<double> mags(s.values.size());
  for (int i = 0; i < s.size(); ++i) mags[i] = std::abs(s[i]);
  EXPECT_GT(*std::min_element(mags.begin(), mags.end()), 0.0);
  EXPECT_LT(KsUniform(mags), 0.02);
}

TEST(SampleOpinions, PowerLawTwoSkewsHigh) {
  const SignedTrustGraph g(100000, {});
  const auto s = SampleOpinions(ParseDistribution("pow2", 6), g);
  // |s| = sqrt(u) has mean 2/3.
  EXPECT_NEAR(s.values.cwiseAbs().mean(), 2.0 / 3.0, 0.01);
}

TEST(SampleOpinions, NormalIsClamped) {
  const SignedTrustGraph g(100000, {});
  const auto s = SampleOpinions(ParseDistribution("normal", 8), g);
  EXPECT_TRUE(s.InRange());
  const double clamped = (s.values.array().abs() == 1.0).cast<double>().mean();
  EXPECT_NEAR(clamped, 0.3173, 0.01);
}

TEST(SampleOpinions, DegreeCorrelatedStar) {
  std::vector<Edge> edges;
  for (int k = 1; k <= 5; ++k) edges.push_back({k, 0, 1.0});
  edges.push_back({1, 2, -0.5});
  const SignedTrustGraph g(6, edges);
  const auto s = SampleOpinions(ParseDistribution("degree", 1), g);
  EXPECT_EQ(std::abs(s[0]), 1.0);
  EXPECT_EQ(std::abs(s[2]), 0.1);
  EXPECT_EQ(s[3], 0.0);

  std::string warning;
  const auto flat = SampleOpinions(ParseDistribution("degree", 1),
                                   SignedTrustGraph(3, {}), &warning);
  EXPECT_FALSE(warning.empty());
  EXPECT_EQ(flat.values, Eigen::Vector3d::Zero());
}

TEST(SampleOpinions, EveryDistributionIsInternalValid) {
  const auto g = RandomSignedGraph(300, 0.02, 3);
  for (const auto& name : StandardDistributionNames()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = SampleOpinions(ParseDistribution(name, seed), g);
      EXPECT_TRUE(s.InRange()) << name;
      EXPECT_EQ(s.values, SampleOpinions(ParseDistribution(name, seed), g).values);
    }
  }
}

TEST(ExperimentConfig, JsonRoundTripAndValidation) {
  const auto c = ExperimentConfig::FromJson({{"dataset", "synthetic:10:0.2"}});
  EXPECT_EQ(c.budgets, (std::vector<double>{10, 50, 100}));
  EXPECT_EQ(c.methods, AllMethods());
  EXPECT_EQ(c.distributions, StandardDistributionNames());
  const auto again = ExperimentConfig::FromJson(c.ToJson());
  EXPECT_EQ(again.ToJson(), c.ToJson());

  using nlohmann::json;
  EXPECT_THROW(ExperimentConfig::FromJson(json::object()), UsageError);
  EXPECT_THROW(ExperimentConfig::FromJson(
                   {{"dataset", "x"}, {"budgets", json::array({2, 1})}}),
               UsageError);
  EXPECT_THROW(ExperimentConfig::FromJson(
                   {{"dataset", "x"}, {"methods", json::array({"eop_trust"})}}),
               UsageError);
  EXPECT_THROW(ExperimentConfig::FromJson(
                   {{"dataset", "x"}, {"distributions", json::array({"beta"})}}),
               UsageError);
}

TEST(LoadDataset, Synthetic) {
  const auto g = LoadDataset("synthetic:50:0.1", {}, 3);
  EXPECT_EQ(g.num_nodes(), 50);
  EXPECT_EQ(g.edges(), RandomSignedGraph(50, 0.1, 3).edges());
  EXPECT_THROW(LoadDataset("synthetic:50", {}, 3), UsageError);
  EXPECT_THROW(LoadDataset("synthetic:50:2", {}, 3), UsageError);
}

TEST(DeriveSeed, DependsOnLabelAndBase) {
  EXPECT_EQ(DeriveSeed(1, "uniform"), DeriveSeed(1, "uniform"));
  EXPECT_NE(DeriveSeed(1, "uniform"), DeriveSeed(1, "normal"));
  EXPECT_NE(DeriveSeed(1, "uniform"), DeriveSeed(2, "uniform"));
}

TEST(RunExperiment, ZeroBudget) {
  ExperimentConfig c;
  c.dataset = "synthetic:40:0.1";
  c.distributions = {"uniform"};
  c.budgets = {0};
  c.methods = {"siop", "iop_rand"};
  const auto r = RunExperiment(c);
  ASSERT_EQ(r.cells.size(), 2u);
  for (const auto& cell : r.cells) EXPECT_EQ(cell.benefit, 0.0);
}

TEST(RunExperiment, SweepProperties) {
  ExperimentConfig c;
  c.dataset = "synthetic:120:0.05";
  c.budgets = {1, 3, 6, 10};
  c.methods = AllMethods();
  c.seed = 9;
  const auto r = RunExperiment(c);
  EXPECT_EQ(r.cells.size(), 5u * 4u * 9u);
  EXPECT_LT(r.max_crosscheck_error, 1e-6);
  for (const auto& dist : c.distributions) {
    double prev = 0.0;
    double prev_budget = 0.0;
    double prev_slope = 1e300;
    for (double b : c.budgets) {
      const double v = r.Find(dist, "siop", b)->benefit;
      EXPECT_GE(v, prev - 1e-12);
      const double slope = (v - prev) / (b - prev_budget);
      EXPECT_LE(slope, prev_slope + 1e-9);
      prev_slope = slope;
      prev = v;
      prev_budget = b;
      for (const char* h : {"iop_rand", "iop_trust", "iop_io", "iop_eo"}) {
        EXPECT_GE(v, r.Find(dist, h, b)->benefit - 1e-9);
      }
    }
    const auto& units = r.siop_unit_benefits.at(dist);
    for (std::size_t k = 1; k < units.size(); ++k) EXPECT_GE(units[k - 1], units[k]);
    const double seop1 = r.Find(dist, "seop", 1)->benefit;
    for (const char* h : {"eop_rand", "eop_io", "eop_iots"}) {
      EXPECT_GE(seop1, r.Find(dist, h, 1)->benefit - 1e-9);
    }
  }
}

TEST(RunExperiment, RejectsFractionalEopBudget) {
  ExperimentConfig c;
  c.dataset = "synthetic:20:0.1";
  c.budgets = {1.5};
  c.methods = {"seop"};
  EXPECT_THROW(RunExperiment(c), UsageError);
  c.methods = {"siop"};
  EXPECT_NO_THROW(RunExperiment(c));
}

TEST(RunExperiment, DeterministicOutputs) {
  ExperimentConfig c;
  c.dataset = "synthetic:80:0.05";
  c.budgets = {2, 5};
  c.seed = 4;
  const fs::path a = TempDir("det_a");
  const fs::path b = TempDir("det_b");
  WriteExperimentOutputs(RunExperiment(c), a);
  WriteExperimentOutputs(RunExperiment(c), b);
  EXPECT_EQ(Slurp(a / "report.csv"), Slurp(b / "report.csv"));
  EXPECT_EQ(Slurp(a / "curves" / "uniform_iop.svg"),
            Slurp(b / "curves" / "uniform_iop.svg"));
  EXPECT_TRUE(fs::exists(a / "summary.json"));
  EXPECT_TRUE(fs::exists(a / "timings.csv"));
  const std::string csv = Slurp(a / "report.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "dataset,dist,method,budget,benefit");
  const auto summary = nlohmann::json::parse(Slurp(a / "summary.json"));
  EXPECT_TRUE(summary.contains("avg_benefit"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(FormatRatio, Cells) {
  EXPECT_EQ(FormatRatio(10.0, 0.5), ">10×");
  EXPECT_EQ(FormatRatio(10.0, 1.0), ">10×");
  EXPECT_EQ(FormatRatio(10.0, -2.0), ">10×");
  EXPECT_EQ(FormatRatio(10.0, 4.0), "2.50×");
}

TEST(TimingComparison, NaiveSlowerAndSkippable) {
  const auto g = RandomSignedGraph(200, 0.02, 1);
  const LaplacianSystem ls(g);
  const auto r = TimingComparison(ls, g, 3, 1);
  EXPECT_EQ(r.num_nodes, 200);
  ASSERT_TRUE(r.ratio.has_value());
  EXPECT_GT(*r.ratio, 1.0);
  const auto fast_only = TimingComparison(ls, g, 3, 1, false);
  EXPECT_FALSE(fast_only.naive_ms_per_iter.has_value());
  EXPECT_FALSE(fast_only.ratio.has_value());
}

TEST(RenderSvg, Basic) {
  LineChart chart;
  chart.title = "a<b";
  chart.series.push_back({"siop", {1, 2, 3}, {0.1, 0.2, 0.25}, false});
  chart.series.push_back({"unit", {1, 2, 3}, {0.1, 0.1, 0.05}, true});
  const std::string svg = RenderSvg(chart);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace trustmax
