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

// trustmax: command-line front end for the trustmax library.
//
// Exit codes: 0 ok, 1 usage, 2 data or validation, 3 numerical.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trustmax/baselines.h"
#include "trustmax/contribution.h"
#include "trustmax/dynamics.h"
#include "trustmax/eop.h"
#include "trustmax/errors.h"
#include "trustmax/experiments.h"
#include "trustmax/graph.h"
#include "trustmax/iop.h"
#include "trustmax/sampling.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace trustmax {
namespace {

struct Flags {
  std::string graph;
  std::string format = "csv_triplet";
  std::optional<double> normalize;
  std::string self_loops = "drop";
  std::string duplicates = "keep_last";
  std::string opinions;
  std::string dist;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out_dir = "./trustmax_out";
  bool force = false;

  double budget = 0.0;
  std::string mode = "fast";
  bool stop_when_nonpositive = false;
  std::string rank = "abs";
  bool iterative = false;
  std::string problem;
  std::string heuristic;
  bool signed_trust = false;
  std::string config;
  std::string dataset;
  std::vector<double> budgets;
  std::vector<std::string> methods;
  std::vector<std::string> dists;
  bool no_naive = false;
  int spectral_cap = kDefaultSpectralCap;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void AddGraphFlags(CLI::App* cmd, Flags& f, bool required = true) {
  auto* g = cmd->add_option("-g,--graph", f.graph, "Edge-list file");
  if (required) g->required();
  cmd->add_option("--format", f.format, "Edge-list format")
      ->check(CLI::IsMember({"csv_triplet", "snap_rating"}))
      ->capture_default_str();
  cmd->add_option("--normalize", f.normalize,
                  "Divide every weight by this positive number");
  cmd->add_option("--self-loops", f.self_loops, "Self-loop policy")
      ->check(CLI::IsMember({"reject", "drop"}))
      ->capture_default_str();
  cmd->add_option("--duplicates", f.duplicates, "Duplicate-edge policy")
      ->check(CLI::IsMember({"reject", "keep_last"}))
      ->capture_default_str();
}

void AddOpinionFlags(CLI::App* cmd, Flags& f) {
  auto* s = cmd->add_option("-s,--opinions", f.opinions,
                            "Internal opinions CSV (node_id,value)");
  auto* d = cmd->add_option(
      "--dist", f.dist,
      "Sample internal opinions: uniform, normal, degree or pow<alpha>");
  s->excludes(d);
  d->excludes(s);
}

void AddCommonFlags(CLI::App* cmd, Flags& f, bool writes_files) {
  cmd->add_option("--seed", f.seed, "Seed for all randomness")
      ->capture_default_str();
  cmd->add_flag("--json", f.json, "Print machine-readable JSON on stdout");
  if (writes_files) {
    cmd->add_option("-o,--out-dir", f.out_dir, "Output directory")
        ->capture_default_str();
    cmd->add_flag("--force", f.force, "Overwrite existing output files");
  }
}

LoadOptions MakeLoadOptions(const Flags& f) {
  LoadOptions o;
  o.format = f.format == "snap_rating" ? EdgeListFormat::kSnapRating
                                       : EdgeListFormat::kCsvTriplet;
  o.normalize_divisor = f.normalize;
  o.self_loops =
      f.self_loops == "reject" ? SelfLoopPolicy::kReject : SelfLoopPolicy::kDrop;
  o.duplicates = f.duplicates == "reject" ? DuplicatePolicy::kReject
                                          : DuplicatePolicy::kKeepLast;
  return o;
}

void CheckOpinionSource(const Flags& f) {
  if (f.opinions.empty() && f.dist.empty()) {
    throw UsageError("internal opinions needed: pass --opinions or --dist");
  }
  if (!f.dist.empty()) ParseDistribution(f.dist, f.seed);
}

OpinionVector GetOpinions(const Flags& f, const SignedTrustGraph& g,
                          std::vector<std::string>& warnings) {
  if (!f.opinions.empty()) return LoadOpinions(f.opinions, g);
  std::string warning;
  OpinionVector s = SampleOpinions(ParseDistribution(f.dist, f.seed), g, &warning);
  if (!warning.empty()) warnings.push_back(warning);
  return s;
}

// Refuses to clobber files unless --force.
fs::path PrepareOutput(const Flags& f, const std::vector<std::string>& names) {
  const fs::path dir(f.out_dir);
  if (!f.force) {
    for (const auto& name : names) {
      if (fs::exists(dir / name)) {
        throw UsageError((dir / name).string() +
                         " exists; pass --force to overwrite");
      }
    }
  }
  fs::create_directories(dir);
  return dir;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
}

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

int RunSolve(const Flags& f) {
  CheckOpinionSource(f);
  const fs::path dir = PrepareOutput(f, {"zstar.csv"});
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  std::vector<std::string> warnings;
  const OpinionVector s = GetOpinions(f, g, warnings);

  OpinionVector z;
  int iters = 0;
  if (f.iterative) {
    IterativeEquilibrium r = EquilibriumIterative(g, s);
    z = std::move(r.z);
    iters = r.iters;
  } else {
    z = EquilibriumDirect(LaplacianSystem(g), s);
  }
  const double p = OverallOpinion(z);
  std::ostringstream csv;
  WriteOpinions(g, z, csv);
  WriteText(dir / "zstar.csv", csv.str());

  PrintWarnings(warnings);
  if (f.json) {
    json j = {{"n", g.num_nodes()},
              {"p", p},
              {"method", f.iterative ? "iterative" : "direct"},
              {"zstar", (dir / "zstar.csv").string()}};
    if (f.iterative) j["iterations"] = iters;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "p(z*) = " << Num(p) << '\n'
              << "z* written to " << (dir / "zstar.csv").string() << '\n';
  }
  return 0;
}

int RunContribution(const Flags& f) {
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  const ContributionIndex ci = SolveContributionIndex(LaplacianSystem(g));
  const auto ranked = RankByContribution(
      ci, f.rank == "signed" ? RankBy::kSigned : RankBy::kAbsolute);
  if (f.json) {
    json rows = json::array();
    for (const auto& [i, gi] : ranked) {
      rows.push_back({{"node_id", g.label(i)}, {"g", gi}});
    }
    std::cout << json{{"rank", f.rank}, {"contribution", rows}}.dump(2) << '\n';
  } else {
    std::cout << "node_id,g\n";
    for (const auto& [i, gi] : ranked) {
      std::cout << g.label(i) << ',' << Num(gi) << '\n';
    }
  }
  return 0;
}

std::string IopPlanCsv(const SignedTrustGraph& g, const IopPlan& plan) {
  std::string csv = "node_id,delta_s\n";
  for (const auto& [i, ds] : plan.steps) {
    csv += g.label(i) + ',' + Num(ds) + '\n';
  }
  return csv;
}

json IopPlanJson(const SignedTrustGraph& g, const IopPlan& plan) {
  json rows = json::array();
  for (const auto& [i, ds] : plan.steps) {
    rows.push_back({{"node_id", g.label(i)}, {"delta_s", ds}});
  }
  return rows;
}

double PAfterIop(const LaplacianSystem& ls, const OpinionVector& s,
                 const IopPlan& plan) {
  Eigen::VectorXd moved = (s.values + plan.delta_s).cwiseMax(-1.0).cwiseMin(1.0);
  return OverallOpinion(EquilibriumDirect(ls, OpinionVector::Internal(moved)));
}

std::string EopPlanCsv(const SignedTrustGraph& g, const EopPlan& plan) {
  std::string csv = "step,node_id,benefit,p_after\n";
  for (std::size_t k = 0; k < plan.pinned.size(); ++k) {
    csv += std::to_string(k + 1) + ',' + g.label(plan.pinned[k]) + ',';
    csv += k < plan.step_benefits.size() ? Num(plan.step_benefits[k]) : "";
    csv += ',';
    csv += k < plan.p_trajectory.size() ? Num(plan.p_trajectory[k]) : "";
    csv += '\n';
  }
  return csv;
}

json EopPlanJson(const SignedTrustGraph& g, const EopPlan& plan) {
  json rows = json::array();
  for (std::size_t k = 0; k < plan.pinned.size(); ++k) {
    json row = {{"step", k + 1}, {"node_id", g.label(plan.pinned[k])}};
    if (k < plan.step_benefits.size()) row["benefit"] = plan.step_benefits[k];
    if (k < plan.p_trajectory.size()) row["p_after"] = plan.p_trajectory[k];
    rows.push_back(row);
  }
  return rows;
}

int EopBudget(double budget) {
  if (budget != std::floor(budget) || budget < 1) {
    throw UsageError("EOP budget must be a positive integer");
  }
  return static_cast<int>(budget);
}

void Emit(const Flags& f, const fs::path& dir, const std::string& stem,
          const std::string& csv, json summary, const json& plan) {
  WriteText(dir / (stem + "_plan.csv"), csv);
  WriteText(dir / (stem + "_summary.json"), summary.dump(2) + "\n");
  if (f.json) {
    summary["plan"] = plan;
    std::cout << summary.dump(2) << '\n';
    return;
  }
  std::cout << csv;
  for (const auto& [key, value] : summary.items()) {
    std::cout << "# " << key << " = "
              << (value.is_number_float() ? Num(value.get<double>())
                                          : value.dump())
              << '\n';
  }
}

int RunIop(const Flags& f) {
  CheckOpinionSource(f);
  if (!(f.budget >= 0.0)) throw UsageError("budget must be nonnegative");
  const fs::path dir = PrepareOutput(f, {"iop_plan.csv", "iop_summary.json"});
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  std::vector<std::string> warnings;
  const OpinionVector s = GetOpinions(f, g, warnings);
  const LaplacianSystem ls(g);

  const ContributionIndex ci = SolveContributionIndex(ls);
  const IopPlan plan = SolveIop(ci, s, f.budget);
  ValidateIopPlan(plan, ci, s, f.budget);
  const double p_before = OverallOpinion(EquilibriumDirect(ls, s));
  const double p_after = PAfterIop(ls, s, plan);

  PrintWarnings(warnings);
  json summary = {{"budget", f.budget},     {"spent", plan.spent},
                  {"benefit", plan.benefit}, {"p_before", p_before},
                  {"p_after", p_after}};
  Emit(f, dir, "iop", IopPlanCsv(g, plan), summary, IopPlanJson(g, plan));
  return 0;
}

int RunEop(const Flags& f) {
  CheckOpinionSource(f);
  const int mu = EopBudget(f.budget);
  const fs::path dir = PrepareOutput(f, {"eop_plan.csv", "eop_summary.json"});
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  std::vector<std::string> warnings;
  const OpinionVector s = GetOpinions(f, g, warnings);
  const LaplacianSystem ls(g);

  EopOptions options;
  options.mode = f.mode == "naive" ? EopMode::kNaive : EopMode::kFast;
  options.stop_when_nonpositive = f.stop_when_nonpositive;
  const EopPlan plan = SolveEop(ls, s, mu, options);
  warnings.insert(warnings.end(), plan.warnings.begin(), plan.warnings.end());

  PrintWarnings(warnings);
  const double p_after =
      plan.p_trajectory.empty() ? plan.p_initial : plan.p_trajectory.back();
  json summary = {{"budget", mu},
                  {"mode", f.mode},
                  {"pinned", plan.pinned.size()},
                  {"benefit", plan.total_benefit},
                  {"p_before", plan.p_initial},
                  {"p_after", p_after}};
  Emit(f, dir, "eop", EopPlanCsv(g, plan), summary, EopPlanJson(g, plan));
  return 0;
}

int RunBaseline(const Flags& f) {
  CheckOpinionSource(f);
  const HeuristicKind kind{ParseProblem(f.problem), ParseHeuristic(f.heuristic)};
  if (!kind.IsValid()) {
    throw UsageError("heuristic " + f.heuristic + " is not defined for " +
                     f.problem);
  }
  const bool iop = kind.problem == Problem::kIop;
  const int mu = iop ? 0 : EopBudget(f.budget);
  if (iop && !(f.budget >= 0.0)) throw UsageError("budget must be nonnegative");
  const fs::path dir =
      PrepareOutput(f, {"baseline_plan.csv", "baseline_summary.json"});
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  std::vector<std::string> warnings;
  const OpinionVector s = GetOpinions(f, g, warnings);
  const LaplacianSystem ls(g);

  const OpinionVector z_star = EquilibriumDirect(ls, s);
  const double p_before = OverallOpinion(z_star);
  RankOptions rank;
  rank.seed = f.seed;
  rank.signed_trust = f.signed_trust;
  const std::vector<int> order = RankNodes(kind, g, s, &z_star, rank);

  json summary = {{"problem", f.problem},
                  {"heuristic", f.heuristic},
                  {"budget", f.budget}};
  PrintWarnings(warnings);
  if (iop) {
    const ContributionIndex ci = SolveContributionIndex(ls);
    const IopPlan plan = RunIopHeuristic(order, ci, s, f.budget);
    ValidateIopPlan(plan, ci, s, f.budget);
    summary["spent"] = plan.spent;
    summary["benefit"] = plan.benefit;
    summary["p_before"] = p_before;
    summary["p_after"] = PAfterIop(ls, s, plan);
    Emit(f, dir, "baseline", IopPlanCsv(g, plan), summary,
         IopPlanJson(g, plan));
  } else {
    const EopPlan plan = RunEopHeuristic(order, ls, s, mu, p_before);
    summary["benefit"] = plan.total_benefit;
    summary["p_before"] = p_before;
    summary["p_after"] = plan.p_trajectory.back();
    std::string csv = "rank,node_id\n";
    json rows = json::array();
    for (std::size_t k = 0; k < plan.pinned.size(); ++k) {
      csv += std::to_string(k + 1) + ',' + g.label(plan.pinned[k]) + '\n';
      rows.push_back({{"rank", k + 1}, {"node_id", g.label(plan.pinned[k])}});
    }
    Emit(f, dir, "baseline", csv, summary, rows);
  }
  return 0;
}

int RunExperimentCmd(const Flags& f, const CLI::App& cmd) {
  json j = json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw DataError("cannot open " + f.config);
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DataError("bad config JSON: " + std::string(e.what()));
    }
  }
  if (!f.dataset.empty()) j["dataset"] = f.dataset;
  if (!f.graph.empty()) j["dataset"] = f.graph;
  if (cmd.count("--format")) j["format"] = f.format;
  if (f.normalize) j["normalize"] = *f.normalize;
  if (!f.budgets.empty()) j["budgets"] = f.budgets;
  if (!f.methods.empty()) j["methods"] = f.methods;
  if (!f.dists.empty()) j["distributions"] = f.dists;
  if (cmd.count("--seed")) j["seed"] = f.seed;
  if (f.signed_trust) j["signed_trust"] = true;
  if (!j.contains("dataset")) {
    throw UsageError("experiment needs --config, --dataset or --graph");
  }
  const ExperimentConfig config = ExperimentConfig::FromJson(j);
  const fs::path dir =
      PrepareOutput(f, {"report.csv", "timings.csv", "summary.json"});

  const ExperimentReport report = RunExperiment(config);
  WriteExperimentOutputs(report, dir);
  PrintWarnings(report.warnings);
  if (f.json) {
    json out = ReportSummary(report);
    out["out_dir"] = dir.string();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ReportCsv(report);
    std::cout << "# max cross-check error = "
              << Num(report.max_crosscheck_error) << '\n'
              << "# outputs in " << dir.string() << '\n';
  }
  return 0;
}

int RunTiming(const Flags& f) {
  const int mu = EopBudget(f.budget);
  const std::string spec = f.graph.empty() ? f.dataset : f.graph;
  if (spec.empty()) throw UsageError("timing needs --dataset or --graph");
  const SignedTrustGraph g = LoadDataset(spec, MakeLoadOptions(f), f.seed);
  const LaplacianSystem ls(g);
  const TimingResult r = TimingComparison(ls, g, mu, f.seed, !f.no_naive);
  if (f.json) {
    json j = {{"n", r.num_nodes},
              {"iterations", r.iterations},
              {"fast_ms_per_iter", r.fast_ms_per_iter}};
    j["naive_ms_per_iter"] =
        r.naive_ms_per_iter ? json(*r.naive_ms_per_iter) : json(nullptr);
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n = " << r.num_nodes << ", iterations = " << r.iterations
              << '\n'
              << "fast  ms/iter = " << Num(r.fast_ms_per_iter) << '\n';
    if (r.naive_ms_per_iter) {
      std::cout << "naive ms/iter = " << Num(*r.naive_ms_per_iter) << '\n'
                << "ratio = " << Num(*r.ratio) << '\n';
    } else {
      std::cout << "naive skipped (n > " << kNaiveTimingCap
                << " or --no-naive)\n";
    }
  }
  return 0;
}

int RunValidate(const Flags& f) {
  const SignedTrustGraph g = LoadEdgeList(f.graph, MakeLoadOptions(f));
  double w_min = 0.0, w_max = 0.0;
  std::size_t positive = 0;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const double w = g.edges()[k].weight;
    w_min = k == 0 ? w : std::min(w_min, w);
    w_max = k == 0 ? w : std::max(w_max, w);
    positive += w > 0.0;
  }
  int sinks = 0;
  const LaplacianSystem ls(g);
  for (int i = 0; i < g.num_nodes(); ++i) sinks += ls.IsSink(i);

  std::optional<SpectralReport> spectral;
  if (g.num_nodes() <= f.spectral_cap) {
    spectral = SpectralCheck(ls, 1e-9, f.spectral_cap);
  }

  json j = {{"n", g.num_nodes()},
            {"edges", g.num_edges()},
            {"positive_edges", positive},
            {"negative_edges", g.num_edges() - positive},
            {"weight_min", w_min},
            {"weight_max", w_max},
            {"sinks", sinks},
            {"self_loops_dropped", g.self_loops_dropped},
            {"duplicates_replaced", g.duplicates_replaced}};
  if (spectral) {
    j["spectral"] = {{"ok", spectral->ok},
                     {"min_re", spectral->min_re},
                     {"max_re", spectral->max_re},
                     {"sym_min", spectral->bound_lo},
                     {"sym_max", spectral->bound_hi},
                     {"symmetric_part_psd", spectral->symmetric_part_psd}};
  } else {
    j["spectral"] = "skipped";
  }
  if (f.json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "nodes: " << g.num_nodes() << '\n'
            << "edges: " << g.num_edges() << " (" << positive << " trust, "
            << g.num_edges() - positive << " distrust)\n"
            << "weight range: [" << Num(w_min) << ", " << Num(w_max) << "]\n"
            << "sinks: " << sinks << '\n'
            << "self-loops dropped: " << g.self_loops_dropped << '\n'
            << "duplicates replaced: " << g.duplicates_replaced << '\n';
  if (spectral) {
    std::cout << "spectral check: " << (spectral->ok ? "ok" : "FAILED")
              << "  Re sp(L) in [" << Num(spectral->min_re) << ", "
              << Num(spectral->max_re) << "], sp(L_sym) in ["
              << Num(spectral->bound_lo) << ", " << Num(spectral->bound_hi)
              << "]\n";
  } else {
    std::cout << "spectral check: skipped (n > " << f.spectral_cap << ")\n";
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Opinion maximization on signed trust networks"};
  app.require_subcommand(1);
  Flags f;

  auto* solve = app.add_subcommand("solve", "Equilibrium expressed opinions");
  AddGraphFlags(solve, f);
  AddOpinionFlags(solve, f);
  AddCommonFlags(solve, f, true);
  solve->add_flag("--iterative", f.iterative,
                  "Use fixed-point iteration instead of a direct solve");

  auto* contribution =
      app.add_subcommand("contribution", "Contribution index of every node");
  AddGraphFlags(contribution, f);
  AddCommonFlags(contribution, f, false);
  contribution->add_option("--rank", f.rank, "Sort by |g| or by signed g")
      ->check(CLI::IsMember({"abs", "signed"}))
      ->capture_default_str();

  auto* iop = app.add_subcommand("iop", "Greedy internal-opinion modification");
  AddGraphFlags(iop, f);
  AddOpinionFlags(iop, f);
  AddCommonFlags(iop, f, true);
  iop->add_option("--budget", f.budget, "L1 modification budget")->required();

  auto* eop = app.add_subcommand("eop", "Greedy expressed-opinion pinning");
  AddGraphFlags(eop, f);
  AddOpinionFlags(eop, f);
  AddCommonFlags(eop, f, true);
  eop->add_option("--budget", f.budget, "Number of nodes to pin")->required();
  eop->add_option("--mode", f.mode,
                  "fast: rank-one updates; naive: re-evaluate every candidate")
      ->check(CLI::IsMember({"fast", "naive"}))
      ->capture_default_str();
  eop->add_flag("--stop-when-nonpositive", f.stop_when_nonpositive,
                "Stop before a step whose best benefit is <= 0");

  auto* baseline = app.add_subcommand("baseline", "Run one heuristic baseline");
  AddGraphFlags(baseline, f);
  AddOpinionFlags(baseline, f);
  AddCommonFlags(baseline, f, true);
  baseline->add_option("--problem", f.problem, "iop or eop")
      ->required()
      ->check(CLI::IsMember({"iop", "eop"}));
  baseline
      ->add_option("--heuristic", f.heuristic,
                   "iop: rand, trust, io, eo; eop: rand, io, iots")
      ->required()
      ->check(CLI::IsMember({"rand", "trust", "io", "eo", "iots"}));
  baseline
      ->add_option("--budget", f.budget,
                   "L1 budget (iop) or number of pinned nodes (eop)")
      ->required();
  baseline->add_flag("--signed-trust", f.signed_trust,
                     "Trust sums over signed instead of absolute weights");

  auto* experiment =
      app.add_subcommand("experiment", "Budget sweep of solvers vs heuristics");
  AddGraphFlags(experiment, f, false);
  AddCommonFlags(experiment, f, true);
  experiment->add_option("--config", f.config, "Experiment config JSON file");
  experiment->add_option("--dataset", f.dataset,
                         "Edge-list path or synthetic:<n>:<edge_prob>");
  experiment->add_option("--budgets", f.budgets, "Budget grid, ascending")
      ->delimiter(',');
  experiment->add_option("--methods", f.methods, "Methods to run")
      ->delimiter(',');
  experiment->add_option("--dists", f.dists, "Opinion distributions")
      ->delimiter(',');
  experiment->add_flag("--signed-trust", f.signed_trust,
                       "Trust sums over signed instead of absolute weights");

  auto* timing =
      app.add_subcommand("timing", "Per-iteration time of fast vs naive EOP");
  AddGraphFlags(timing, f, false);
  AddCommonFlags(timing, f, false);
  timing->add_option("--dataset", f.dataset,
                     "Edge-list path or synthetic:<n>:<edge_prob>");
  f.budget = 10;
  timing->add_option("--budget", f.budget, "Iterations to time")
      ->capture_default_str();
  timing->add_flag("--no-naive", f.no_naive, "Time the fast mode only");

  auto* validate =
      app.add_subcommand("validate", "Load a graph and report its properties");
  AddGraphFlags(validate, f);
  validate->add_flag("--json", f.json, "Print machine-readable JSON on stdout");
  validate
      ->add_option("--spectral-cap", f.spectral_cap,
                   "Largest n for the dense spectral check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*solve) return RunSolve(f);
  if (*contribution) return RunContribution(f);
  if (*iop) return RunIop(f);
  if (*eop) return RunEop(f);
  if (*baseline) return RunBaseline(f);
  if (*experiment) return RunExperimentCmd(f, *experiment);
  if (*timing) return RunTiming(f);
  return RunValidate(f);
}

}  // namespace
}  // namespace trustmax

int main(int argc, char** argv) {
  try {
    return trustmax::Main(argc, argv);
  } catch (const trustmax::UsageError& e) {
    std::cerr << "trustmax: " << e.what() << '\n';
    return 1;
  } catch (const trustmax::DataError& e) {
    std::cerr << "trustmax: " << e.what() << '\n';
    return 2;
  } catch (const trustmax::NumericalError& e) {
    std::cerr << "trustmax: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "trustmax: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "trustmax: " << e.what() << '\n';
    return 3;
  }
}
