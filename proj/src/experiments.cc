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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <Eigen/LU>

#include "trustmax/baselines.h"
#include "trustmax/contribution.h"
#include "trustmax/dynamics.h"
#include "trustmax/eop.h"
#include "trustmax/errors.h"
#include "trustmax/iop.h"
#include "trustmax/rng.h"
#include "trustmax/sampling.h"
#include "trustmax/svg.h"

namespace trustmax {
namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

bool IsIopMethod(const std::string& m) {
  return m == "siop" || m.starts_with("iop_");
}

// "iop_trust" -> kTrust; the solver names map to nothing.
std::optional<HeuristicKind> HeuristicOf(const std::string& method) {
  if (method == "siop" || method == "seop") return std::nullopt;
  const auto sep = method.find('_');
  if (sep == std::string::npos) {
    throw UsageError("unknown method '" + method + "'");
  }
  HeuristicKind kind{ParseProblem(method.substr(0, sep)),
                     ParseHeuristic(method.substr(sep + 1))};
  if (!kind.IsValid()) {
    throw UsageError("method '" + method + "' pairs a heuristic with the " +
                     "wrong problem");
  }
  return kind;
}

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<std::string> AllMethods() {
  return {"siop", "iop_rand", "iop_trust", "iop_io", "iop_eo",
          "seop", "eop_rand", "eop_io",    "eop_iots"};
}

ExperimentConfig ExperimentConfig::FromJson(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    c.dataset = j.at("dataset").get<std::string>();
    const std::string format = j.value("format", "csv_triplet");
    if (format == "csv_triplet") {
      c.load.format = EdgeListFormat::kCsvTriplet;
    } else if (format == "snap_rating") {
      c.load.format = EdgeListFormat::kSnapRating;
    } else {
      throw UsageError("unknown format '" + format + "'");
    }
    if (j.contains("normalize") && !j.at("normalize").is_null()) {
      c.load.normalize_divisor = j.at("normalize").get<double>();
    }
    c.distributions = j.value("distributions", StandardDistributionNames());
    c.budgets = j.value("budgets", std::vector<double>{10, 50, 100});
    c.methods = j.value("methods", AllMethods());
    c.seed = j.value("seed", std::uint64_t{0});
    c.signed_trust = j.value("signed_trust", false);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad experiment config: ") + e.what());
  }
  if (c.budgets.empty()) throw UsageError("budget grid is empty");
  for (std::size_t k = 0; k < c.budgets.size(); ++k) {
    if (!(c.budgets[k] >= 0.0)) throw UsageError("budgets must be >= 0");
    if (k > 0 && !(c.budgets[k] > c.budgets[k - 1])) {
      throw UsageError("budgets must be strictly ascending");
    }
  }
  for (const auto& d : c.distributions) ParseDistribution(d, 0);
  for (const auto& m : c.methods) HeuristicOf(m);
  return c;
}

nlohmann::json ExperimentConfig::ToJson() const {
  nlohmann::json j;
  j["dataset"] = dataset;
  j["format"] =
      load.format == EdgeListFormat::kCsvTriplet ? "csv_triplet" : "snap_rating";
  j["normalize"] = load.normalize_divisor
                       ? nlohmann::json(*load.normalize_divisor)
                       : nlohmann::json(nullptr);
  j["distributions"] = distributions;
  j["budgets"] = budgets;
  j["methods"] = methods;
  j["seed"] = seed;
  j["signed_trust"] = signed_trust;
  return j;
}

SignedTrustGraph LoadDataset(const std::string& spec, const LoadOptions& load,
                             std::uint64_t seed) {
  if (spec.starts_with("synthetic:")) {
    int n = 0;
    double p = 0.0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "synthetic:%d:%lf%c", &n, &p, &tail) != 2 ||
        n <= 0 || !(p >= 0.0 && p <= 1.0)) {
      throw UsageError("synthetic dataset must look like synthetic:<n>:<p>");
    }
    return RandomSignedGraph(n, p, seed);
  }
  return LoadEdgeList(spec, load);
}

std::uint64_t DeriveSeed(std::uint64_t base, const std::string& label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return SplitMix64(base ^ h).Next();
}

const ExperimentCell* ExperimentReport::Find(const std::string& dist,
                                             const std::string& method,
                                             double budget) const {
  for (const auto& c : cells) {
    if (c.dist == dist && c.method == method && c.budget == budget) return &c;
  }
  return nullptr;
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  report.dataset = config.dataset;
  const SignedTrustGraph g = LoadDataset(config.dataset, config.load,
                                         DeriveSeed(config.seed, "dataset"));
  const LaplacianSystem ls(g);
  const int n = g.num_nodes();
  report.num_nodes = n;
  report.num_edges = g.num_edges();
  if (g.self_loops_dropped > 0) {
    report.warnings.push_back(std::to_string(g.self_loops_dropped) +
                              " self-loops dropped");
  }

  std::vector<std::string> iop_methods;
  std::vector<std::string> eop_methods;
  for (const auto& m : config.methods) {
    (IsIopMethod(m) ? iop_methods : eop_methods).push_back(m);
  }
  int eop_max = 0;
  if (!eop_methods.empty()) {
    CheckDenseCap(n);
    for (double b : config.budgets) {
      if (b != std::floor(b) || b > n) {
        throw UsageError("EOP budgets must be integers no larger than n");
      }
    }
    eop_max = static_cast<int>(config.budgets.back());
  }
  CheckDenseCap(n);

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(ls.DenseSystem());
  const ContributionIndex ci = SolveContributionIndex(ls);

  for (const auto& dist_name : config.distributions) {
    std::string warning;
    const OpinionDistribution dist =
        ParseDistribution(dist_name, DeriveSeed(config.seed, dist_name));
    const OpinionVector s = SampleOpinions(dist, g, &warning);
    if (!warning.empty()) report.warnings.push_back(dist_name + ": " + warning);
    const OpinionVector z = OpinionVector::Expressed(lu.solve(s.values));
    const double p0 = OverallOpinion(z);
    report.p_initial[dist_name] = p0;

    auto add_cell = [&](const std::string& method, double budget,
                        double benefit, double ms, double checked) {
      report.cells.push_back({dist_name, method, budget, benefit, ms});
      report.max_crosscheck_error =
          std::max(report.max_crosscheck_error, std::abs(benefit - checked));
    };

    for (const auto& method : iop_methods) {
      const auto kind = HeuristicOf(method);
      std::vector<int> order;
      if (kind) {
        RankOptions opts{DeriveSeed(config.seed, dist_name + "/" + method),
                         config.signed_trust};
        order = RankNodes(*kind, g, s, &z, opts);
      }
      for (double budget : config.budgets) {
        const auto start = Clock::now();
        const IopPlan plan = kind ? RunIopHeuristic(order, ci, s, budget)
                                  : SolveIop(ci, s, budget);
        const double ms = MsSince(start);
        const Eigen::VectorXd shifted = s.values + plan.delta_s;
        const double checked = OverallOpinion(lu.solve(shifted)) - p0;
        add_cell(method, budget, plan.benefit, ms, checked);
        if (!kind && budget == config.budgets.back()) {
          auto& units = report.siop_unit_benefits[dist_name];
          for (const auto& [node, ds] : plan.steps) {
            units.push_back(std::abs(ci[node]));
          }
        }
      }
    }

    for (const auto& method : eop_methods) {
      const auto kind = HeuristicOf(method);
      if (!kind) {
        if (eop_max == 0) {
          for (double budget : config.budgets) add_cell(method, budget, 0, 0, 0);
          continue;
        }
        const auto start = Clock::now();
        const EopPlan plan = SolveEop(ls, s, eop_max);
        const double total_ms = MsSince(start);
        double step_ms_total = 0.0;
        for (double sec : plan.step_seconds) step_ms_total += 1e3 * sec;
        const double setup_ms = total_ms - step_ms_total;
        for (const auto& w : plan.warnings) {
          report.warnings.push_back(dist_name + "/seop: " + w);
        }
        report.seop_step_benefits[dist_name] = plan.step_benefits;
        for (double budget : config.budgets) {
          const int k = std::min(static_cast<int>(budget),
                                 static_cast<int>(plan.pinned.size()));
          double benefit = 0.0;
          double ms = k > 0 ? setup_ms : 0.0;
          for (int t = 0; t < k; ++t) {
            benefit += plan.step_benefits[t];
            ms += 1e3 * plan.step_seconds[t];
          }
          const std::span<const int> prefix(plan.pinned.data(), k);
          const double checked =
              k > 0 ? PinnedOverallOpinion(ls, s, prefix) - p0 : 0.0;
          add_cell(method, budget, benefit, ms, checked);
        }
        continue;
      }
      RankOptions opts{DeriveSeed(config.seed, dist_name + "/" + method),
                       config.signed_trust};
      const std::vector<int> order = RankNodes(*kind, g, s, &z, opts);
      for (double budget : config.budgets) {
        const int mu = static_cast<int>(budget);
        if (mu == 0) {
          add_cell(method, budget, 0, 0, 0);
          continue;
        }
        const auto start = Clock::now();
        const EopPlan plan = RunEopHeuristic(order, ls, s, mu, p0);
        add_cell(method, budget, plan.total_benefit, MsSince(start),
                 plan.total_benefit);
      }
    }
  }
  return report;
}

std::string FormatRatio(double solver_benefit, double heuristic_benefit) {
  if (heuristic_benefit <= 0.0 || heuristic_benefit <= solver_benefit / 10.0) {
    return ">10×";
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f×", solver_benefit / heuristic_benefit);
  return buf;
}

std::string ReportCsv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "dataset,dist,method,budget,benefit\n";
  for (const auto& c : report.cells) {
    out << report.dataset << ',' << c.dist << ',' << c.method << ','
        << FormatNumber(c.budget) << ',' << FormatNumber(c.benefit) << '\n';
  }
  return out.str();
}

nlohmann::json ReportSummary(const ExperimentReport& report) {
  nlohmann::json j;
  j["dataset"] = report.dataset;
  j["nodes"] = report.num_nodes;
  j["edges"] = report.num_edges;
  j["config"] = report.config.ToJson();
  j["notes"] = {
      "normal opinions are N(0,1) draws clamped to [-1,1]; about 32% of them "
      "land on +-1",
      "avg_benefit averages over distributions at a fixed budget"};
  j["max_crosscheck_error"] = report.max_crosscheck_error;
  j["warnings"] = report.warnings;

  // Average over distributions at each budget.
  std::map<std::string, std::map<double, std::pair<double, int>>> sums;
  for (const auto& c : report.cells) {
    auto& acc = sums[c.method][c.budget];
    acc.first += c.benefit;
    acc.second += 1;
  }
  nlohmann::json avg = nlohmann::json::object();
  auto average = [&](const std::string& method, double budget) {
    const auto& acc = sums.at(method).at(budget);
    return acc.first / acc.second;
  };
  for (const auto& [method, by_budget] : sums) {
    for (const auto& [budget, acc] : by_budget) {
      avg[method][FormatNumber(budget)] = acc.first / acc.second;
    }
  }
  j["avg_benefit"] = avg;

  nlohmann::json ratios = nlohmann::json::object();
  for (const auto& [method, by_budget] : sums) {
    const std::string solver = IsIopMethod(method) ? "siop" : "seop";
    if (method == solver || !sums.contains(solver)) continue;
    for (const auto& [budget, acc] : by_budget) {
      ratios[method][FormatNumber(budget)] =
          FormatRatio(average(solver, budget), acc.first / acc.second);
    }
  }
  j["ratio_vs_solver"] = ratios;
  return j;
}

void WriteExperimentOutputs(const ExperimentReport& report,
                            const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir / "curves");
  {
    std::ofstream out(out_dir / "report.csv", std::ios::binary);
    out << ReportCsv(report);
  }
  {
    std::ofstream out(out_dir / "timings.csv", std::ios::binary);
    out << "dataset,dist,method,budget,ms\n";
    for (const auto& c : report.cells) {
      out << report.dataset << ',' << c.dist << ',' << c.method << ','
          << FormatNumber(c.budget) << ',' << FormatNumber(c.ms) << '\n';
    }
  }
  {
    std::ofstream out(out_dir / "summary.json", std::ios::binary);
    out << ReportSummary(report).dump(2) << '\n';
  }

  for (const auto& dist : report.config.distributions) {
    for (const bool iop : {true, false}) {
      LineChart chart;
      chart.title = report.dataset + " / " + dist + (iop ? " / IOP" : " / EOP");
      chart.x_label = iop ? "budget (L1 modification)" : "budget (pinned nodes)";
      chart.y_label = "overall opinion";
      chart.y2_label = "unit benefit";
      const double p0 = report.p_initial.at(dist);
      const std::string solver = iop ? "siop" : "seop";
      for (const auto& method : report.config.methods) {
        if (IsIopMethod(method) != iop) continue;
        ChartSeries series{method, {}, {}, false};
        ChartSeries unit{method + " unit benefit", {}, {}, true};
        double prev_b = 0.0;
        double prev_benefit = 0.0;
        for (double budget : report.config.budgets) {
          const ExperimentCell* c = report.Find(dist, method, budget);
          if (c == nullptr) continue;
          series.x.push_back(budget);
          series.y.push_back(p0 + c->benefit);
          if (method == solver && budget > prev_b) {
            unit.x.push_back(budget);
            unit.y.push_back((c->benefit - prev_benefit) / (budget - prev_b));
          }
          prev_b = budget;
          prev_benefit = c->benefit;
        }
        chart.series.push_back(std::move(series));
        if (!unit.x.empty()) chart.series.push_back(std::move(unit));
      }
      if (chart.series.empty()) continue;
      std::ofstream out(out_dir / "curves" /
                            (dist + (iop ? "_iop.svg" : "_eop.svg")),
                        std::ios::binary);
      out << RenderSvg(chart);
    }
  }
}

TimingResult TimingComparison(const LaplacianSystem& ls,
                              const SignedTrustGraph& g, int mu,
                              std::uint64_t seed, bool run_naive) {
  OpinionDistribution dist;
  dist.seed = seed;
  const OpinionVector s = SampleOpinions(dist, g);
  TimingResult result;
  result.num_nodes = ls.num_nodes();
  result.iterations = mu;

  auto median_ms = [](const EopPlan& plan) {
    std::vector<double> ms;
    for (double sec : plan.step_seconds) ms.push_back(1e3 * sec);
    return Median(std::move(ms));
  };
  result.fast_ms_per_iter =
      median_ms(SolveEop(ls, s, mu, {EopMode::kFast, false}));
  if (run_naive && ls.num_nodes() <= kNaiveTimingCap) {
    result.naive_ms_per_iter =
        median_ms(SolveEop(ls, s, mu, {EopMode::kNaive, false}));
    if (result.fast_ms_per_iter > 0.0) {
      result.ratio = *result.naive_ms_per_iter / result.fast_ms_per_iter;
    }
  }
  return result;
}

}  // namespace trustmax
