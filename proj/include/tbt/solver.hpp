#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "tbt/cost_eval.hpp"
#include "tbt/generators.hpp"
#include "tbt/invariants.hpp"
#include "tbt/tournament.hpp"
#include "tbt/tree_model.hpp"

namespace tbt {

inline constexpr int kReportSchemaVersion = 1;

struct SolveOptions {
  TieBreakKind tiebreak = TieBreakKind::kLexicographic;
  bool phase1_only = false;
  // Compute the exact optimum when n <= kOracleMaxVertices.
  bool with_oracle = false;
  // Run the structural invariant check after every match.
  bool check_each_match = false;
};

struct SolveReport {
  std::size_t n = 0;
  NodeId root = kNoNode;
  Cost phase1_cost = 0;
  Cost final_cost = 0;
  std::size_t steiner_count = 0;
  std::int64_t charge_total = 0;
  Cost lb = 0;          // lb_instance at maximum degree 3
  Cost trivial_lb = 0;  // n - 1
  double ratio_vs_lb = 1.0;
  std::optional<Cost> oracle_opt;
  std::optional<double> ratio_vs_opt;
  double phase1_seconds = 0;
  double phase2_seconds = 0;
  double eval_seconds = 0;
};

struct SolveResult {
  HostTree phase1;
  HostTree host;  // equals phase1 when phase1_only
  CostBreakdown phase1_cost;
  CostBreakdown final_cost;
  TournamentResult tournament;
  SolveReport report;
  // Filled when check_each_match is set.
  std::size_t structure_violations = 0;
};

// Bracket building followed by the tournament, with costs and bounds. The
// phases run on relabel_bfs(demand); hosts, costs and ledger come back in
// the caller's vertex ids, Steiner ids numbered in BFS order of their owners.
SolveResult solve(const DemandTree& demand, const SolveOptions& options = {});

struct InstanceCheck {
  SolveReport report;
  std::vector<CheckFailure> failures;
};

// Runs the pipeline with every property check enabled: invariants (i)-(iii)
// after bracket building and after each match, the bracket cost bound, the
// Steiner count, the elimination charge bound and the approximation chain
// (against the exact optimum when options.with_oracle and n is small).
InstanceCheck check_instance(const DemandTree& demand,
                             const SolveOptions& options = {});

nlohmann::json report_to_json(const SolveReport& report,
                              const DemandTree& demand);
nlohmann::json ledger_to_json(const TournamentResult& tournament,
                              const DemandTree& demand);

struct BenchRow {
  std::size_t n = 0;
  double mean_seconds = 0;
  double min_seconds = 0;
};

// Times solve() on generated trees; repetition r of size n uses seed + r.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                TreeKind kind, std::uint64_t seed,
                                std::size_t repetitions);

// Mean of time(n_{i+1}) / time(n_i) over consecutive rows, on mean times.
double mean_growth(const std::vector<BenchRow>& rows);

}  // namespace tbt
