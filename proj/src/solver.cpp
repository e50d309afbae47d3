#include "tbt/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "tbt/bracket_builder.hpp"
#include "tbt/exact_oracle.hpp"
#include "tbt/invariants.hpp"
#include "tbt/lower_bounds.hpp"

namespace tbt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double ratio(Cost num, Cost den) {
  if (den == 0) return num == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  return static_cast<double>(num) / static_cast<double>(den);
}

// Copy of a host built on relabel_bfs(demand), in the caller's vertex ids.
// Steiner ids are kept, retired ones included.
HostTree to_original(const HostTree& local, std::span<const NodeId> order) {
  const std::size_t n = order.size();
  auto id = [&](NodeId x) {
    return static_cast<std::size_t>(x) < n ? order[x] : x;
  };
  HostTree out(n);
  out.reserve(local.slot_count());
  for (std::size_t x = n; x < local.slot_count(); ++x) {
    const NodeId owner = local.owner(static_cast<NodeId>(x));
    out.add_steiner(owner == kNoNode ? kNoNode : order[owner]);
  }
  if (n == 0) return out;
  out.set_root(id(local.root()));
  for (std::size_t x = 0; x < local.slot_count(); ++x) {
    const auto node = static_cast<NodeId>(x);
    if (!local.contains(node)) continue;
    for (NodeId c : local.children(node)) out.link(id(node), id(c));
  }
  for (std::size_t x = n; x < local.slot_count(); ++x) {
    if (!local.contains(static_cast<NodeId>(x))) out.retire(static_cast<NodeId>(x));
  }
  return out;
}

CostBreakdown to_original(const CostBreakdown& local,
                          std::span<const NodeId> order) {
  CostBreakdown out;
  out.total = local.total;
  out.per_vertex.resize(local.per_vertex.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.per_vertex[order[i]] = local.per_vertex[i];
  }
  return out;
}

}  // namespace

SolveResult solve(const DemandTree& demand, const SolveOptions& options) {
  SolveResult out;
  SolveReport& r = out.report;
  r.n = demand.size();
  r.root = demand.root();

  // Both phases run on a breadth-first relabeling of G; results are mapped
  // back at the end. Costs and structure do not depend on the labels.
  auto start = Clock::now();
  const DemandTree local = relabel_bfs(demand);
  const auto order = demand.bfs_order();
  HostTree host = run_bracket_builder(local);
  r.phase1_seconds = seconds_since(start);
  r.steiner_count = host.steiner_count();

  start = Clock::now();
  const CostBreakdown phase1_cost = evaluate(local, host);
  r.eval_seconds = seconds_since(start);
  r.phase1_cost = phase1_cost.total;

  start = Clock::now();
  out.phase1 = to_original(host, order);
  out.phase1_cost = to_original(phase1_cost, order);
  if (options.phase1_only) {
    out.host = out.phase1;
    out.final_cost = out.phase1_cost;
  } else {
    const TieBreak tiebreak =
        make_tiebreak(options.tiebreak, demand).reordered(order);
    MatchObserver observer;
    if (options.check_each_match) {
      observer = [&](const HostTree& h, const MatchRewrite&) {
        out.structure_violations += check_structure(local, h).size();
      };
    }
    out.tournament = run_tournament(host, local, tiebreak, observer);
    for (auto& m : out.tournament.ledger) {
      m.winner = order[m.winner];
      m.loser = order[m.loser];
    }
    r.charge_total = out.tournament.charge_total;
    r.phase2_seconds = seconds_since(start);

    start = Clock::now();
    const CostBreakdown final_cost = evaluate(local, host);
    r.eval_seconds += seconds_since(start);
    start = Clock::now();
    out.host = to_original(host, order);
    out.final_cost = to_original(final_cost, order);
    r.phase2_seconds += seconds_since(start);
  }
  r.final_cost = out.final_cost.total;
  r.lb = lb_instance(demand);
  r.trivial_lb = r.n ? static_cast<Cost>(r.n - 1) : 0;
  r.ratio_vs_lb = ratio(r.final_cost, r.lb);
  if (options.with_oracle && r.n <= kOracleMaxVertices) {
    r.oracle_opt = opt_cost(demand).optimum;
    r.ratio_vs_opt = ratio(r.final_cost, *r.oracle_opt);
  }
  return out;
}

InstanceCheck check_instance(const DemandTree& demand,
                             const SolveOptions& options) {
  SolveOptions opts = options;
  opts.phase1_only = false;
  opts.check_each_match = true;
  opts.with_oracle = options.with_oracle && demand.size() <= kOracleMaxVertices;
  SolveResult result = solve(demand, opts);
  InstanceCheck out;
  out.report = result.report;
  auto add = [&](std::vector<CheckFailure> more) {
    for (auto& f : more) out.failures.push_back(std::move(f));
  };
  for (const auto& v : check_structure(demand, result.phase1)) {
    out.failures.push_back({std::string(describe(v.invariant)), v.detail});
  }
  if (result.structure_violations) {
    out.failures.push_back({"invariants (i)-(iii) during the tournament",
                            std::to_string(result.structure_violations) +
                                " violations"});
  }
  add(check_bracket_phase(demand, result.phase1, result.phase1_cost));
  add(check_elimination(demand, result.host, result.report.phase1_cost,
                        result.report.final_cost, result.tournament.ledger));
  add(check_guarantees(demand, result.report.final_cost, result.report.lb,
                       result.report.oracle_opt));
  return out;
}

nlohmann::json report_to_json(const SolveReport& r, const DemandTree& demand) {
  nlohmann::json doc = {
      {"schema_version", kReportSchemaVersion},
      {"n", r.n},
      {"root", r.root == kNoNode ? std::string() : demand.label(r.root)},
      {"phase1_cost", r.phase1_cost},
      {"final_cost", r.final_cost},
      {"steiner_count", r.steiner_count},
      {"charge_total", r.charge_total},
      {"cost_delta", r.final_cost - r.phase1_cost},
      {"lb", r.lb},
      {"trivial_lb", r.trivial_lb},
      {"ratio_vs_lb", r.ratio_vs_lb},
      {"oracle_opt", nullptr},
      {"ratio_vs_opt", nullptr},
      {"wall_seconds",
       {{"phase1", r.phase1_seconds},
        {"phase2", r.phase2_seconds},
        {"eval", r.eval_seconds}}},
  };
  if (r.oracle_opt) doc["oracle_opt"] = *r.oracle_opt;
  if (r.ratio_vs_opt) doc["ratio_vs_opt"] = *r.ratio_vs_opt;
  return doc;
}

nlohmann::json ledger_to_json(const TournamentResult& tournament,
                              const DemandTree& demand) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& m : tournament.ledger) {
    list.push_back({{"steiner", "s" + std::to_string(m.steiner)},
                    {"winner", demand.label(m.winner)},
                    {"loser", demand.label(m.loser)},
                    {"charge", m.charge}});
  }
  return list;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                TreeKind kind, std::uint64_t seed,
                                std::size_t repetitions) {
  std::vector<BenchRow> rows;
  repetitions = std::max<std::size_t>(repetitions, 1);
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n = n;
    row.min_seconds = std::numeric_limits<double>::infinity();
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      const DemandTree demand = root_at(generate(kind, n, seed + rep));
      const auto start = Clock::now();
      const SolveResult result = solve(demand);
      const double t = seconds_since(start);
      row.mean_seconds += t;
      row.min_seconds = std::min(row.min_seconds, t);
    }
    row.mean_seconds /= static_cast<double>(repetitions);
    rows.push_back(row);
  }
  return rows;
}

double mean_growth(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return 0;
  double sum = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    sum += rows[i].mean_seconds / rows[i - 1].mean_seconds;
  }
  return sum / static_cast<double>(rows.size() - 1);
}

}  // namespace tbt
