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

// Budget sweeps of the solvers against the heuristics, and the per-iteration
// timing comparison of the two EOP modes.
//
// Config JSON (every key optional except "dataset"):
//
//   {
//     "dataset": "graphs/alpha.csv" | "synthetic:<n>:<edge_prob>",
//     "format": "csv_triplet" | "snap_rating",
//     "normalize": 10,
//     "distributions": ["uniform", "normal", "pow1", "pow2", "degree"],
//     "budgets": [10, 50, 100],
//     "methods": ["siop", "iop_rand", "iop_trust", "iop_io", "iop_eo",
//                 "seop", "eop_rand", "eop_io", "eop_iots"],
//     "seed": 0,
//     "signed_trust": false
//   }
//
// The IOP budget is the L1 modification budget; the EOP budget is the number
// of pinned nodes, so EOP methods need integer budgets no larger than n.

#ifndef TRUSTMAX_EXPERIMENTS_H_
#define TRUSTMAX_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "trustmax/graph.h"
#include "trustmax/sampling.h"

namespace trustmax {

std::vector<std::string> AllMethods();

struct ExperimentConfig {
  std::string dataset;
  LoadOptions load;
  std::vector<std::string> distributions = StandardDistributionNames();
  std::vector<double> budgets = {10, 50, 100};
  std::vector<std::string> methods = AllMethods();
  std::uint64_t seed = 0;
  bool signed_trust = false;

  // Fills defaults for missing keys; throws UsageError on bad values.
  static ExperimentConfig FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;
};

// "synthetic:<n>:<p>" builds RandomSignedGraph(n, p, seed); anything else is
// an edge-list path.
SignedTrustGraph LoadDataset(const std::string& spec, const LoadOptions& load,
                             std::uint64_t seed);

// Seed for one (base seed, label) pair; labels are distribution or method
// names so cells do not depend on iteration order.
std::uint64_t DeriveSeed(std::uint64_t base, const std::string& label);

struct ExperimentCell {
  std::string dist;
  std::string method;
  double budget = 0.0;
  double benefit = 0.0;
  double ms = 0.0;
};

struct ExperimentReport {
  std::string dataset;
  int num_nodes = 0;
  std::size_t num_edges = 0;
  ExperimentConfig config;
  std::vector<ExperimentCell> cells;
  // Overall opinion with no intervention, per distribution.
  std::map<std::string, double> p_initial;
  // Per distribution: |g_i| of each SIOP step at the largest budget, and
  // SEOP step benefits up to the largest budget.
  std::map<std::string, std::vector<double>> siop_unit_benefits;
  std::map<std::string, std::vector<double>> seop_step_benefits;
  // Largest |reported benefit - end-to-end p difference| over all cells.
  double max_crosscheck_error = 0.0;
  std::vector<std::string> warnings;

  const ExperimentCell* Find(const std::string& dist, const std::string& method,
                             double budget) const;
};

ExperimentReport RunExperiment(const ExperimentConfig& config);

// report.csv is deterministic: dataset,dist,method,budget,benefit. Wall times
// go to timings.csv. Also writes summary.json and curves/*.svg.
void WriteExperimentOutputs(const ExperimentReport& report,
                            const std::filesystem::path& out_dir);
std::string ReportCsv(const ExperimentReport& report);
nlohmann::json ReportSummary(const ExperimentReport& report);

// ">10×" when the heuristic gains at most a tenth of the solver or nothing,
// otherwise the ratio with two decimals.
std::string FormatRatio(double solver_benefit, double heuristic_benefit);

inline constexpr int kNaiveTimingCap = 5000;

struct TimingResult {
  int num_nodes = 0;
  int iterations = 0;
  double fast_ms_per_iter = 0.0;
  std::optional<double> naive_ms_per_iter;  // empty when skipped
  std::optional<double> ratio;              // naive / fast
};

// Median per-iteration wall time of both EOP modes over mu iterations, with
// uniform internal opinions drawn from `seed`. Above 5000 nodes only the
// fast mode runs.
TimingResult TimingComparison(const LaplacianSystem& ls,
                              const SignedTrustGraph& g, int mu,
                              std::uint64_t seed, bool run_naive = true);

}  // namespace trustmax

#endif  // TRUSTMAX_EXPERIMENTS_H_
