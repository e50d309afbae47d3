#include "tbt/invariants.hpp"

#include "tbt/lower_bounds.hpp"

namespace tbt {

std::string_view describe(Invariant invariant) {
  switch (invariant) {
    case Invariant::kSteinerArity:
      return "invariant (i): every Steiner node has two children";
    case Invariant::kParentIsAncestor:
      return "invariant (ii): demand parent is a host ancestor";
    case Invariant::kSteinerChildShape:
      return "invariant (iii): child of a bracket Steiner node is a demand "
             "child of the bracket owner with at most one host child";
  }
  return "unknown invariant";
}

std::vector<Violation> check_structure(const DemandTree& demand,
                                       const HostTree& host) {
  std::vector<Violation> out;
  const std::size_t slots = host.slot_count();

  for (std::size_t i = demand.size(); i < slots; ++i) {
    const auto s = static_cast<NodeId>(i);
    if (host.contains(s) && host.child_count(s) != 2) {
      out.push_back({Invariant::kSteinerArity, s,
                     "s" + std::to_string(s) + " has " +
                         std::to_string(host.child_count(s)) + " children"});
    }
  }

  // Entry/exit times for ancestor queries.
  std::vector<std::int32_t> enter(slots, -1), leave(slots, -1);
  std::vector<std::pair<NodeId, std::uint8_t>> stack{{host.root(), 0}};
  std::int32_t clock = 0;
  enter[host.root()] = clock++;
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    if (next < host.child_count(u)) {
      NodeId c = host.children(u)[next++];
      enter[c] = clock++;
      stack.push_back({c, 0});
    } else {
      leave[u] = clock++;
      stack.pop_back();
    }
  }
  for (std::size_t i = 0; i < demand.size(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const NodeId p = demand.parent(v);
    if (p == kNoNode) continue;
    if (!(enter[p] < enter[v] && leave[v] < leave[p])) {
      out.push_back({Invariant::kParentIsAncestor, v,
                     "vertex " + demand.label(v) + " is not below its parent " +
                         demand.label(p)});
    }
  }

  for (std::size_t i = 0; i < demand.size(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const NodeId s = host.parent(v);
    if (s == kNoNode || !host.is_steiner(s)) continue;
    if (host.owner(s) != demand.parent(v)) {
      out.push_back({Invariant::kSteinerChildShape, v,
                     "vertex " + demand.label(v) + " sits in the bracket of " +
                         (host.owner(s) == kNoNode
                              ? std::string("no vertex")
                              : demand.label(host.owner(s)))});
    }
    if (host.child_count(v) > 1) {
      out.push_back({Invariant::kSteinerChildShape, v,
                     "vertex " + demand.label(v) + " has two host children"});
    }
  }
  return out;
}

std::vector<CheckFailure> check_bracket_phase(const DemandTree& demand,
                                              const HostTree& phase1,
                                              const CostBreakdown& cost) {
  std::vector<CheckFailure> out;
  for (std::size_t i = 0; i < demand.size(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const auto c = static_cast<std::int64_t>(demand.child_count(v));
    if (cost.per_vertex[i] > bracket_upper_bound(c)) {
      out.push_back({"bracket cost bound",
                     "vertex " + demand.label(v) + ": cost " +
                         std::to_string(cost.per_vertex[i]) + " > " +
                         std::to_string(bracket_upper_bound(c))});
    }
  }
  const std::size_t expected = demand.leaf_count() - 1;
  if (phase1.steiner_count() != expected) {
    out.push_back({"steiner count", std::to_string(phase1.steiner_count()) +
                                        " Steiner nodes, leaves - 1 = " +
                                        std::to_string(expected)});
  }
  return out;
}

std::vector<CheckFailure> check_elimination(
    const DemandTree& demand, const HostTree& final_host, Cost phase1_cost,
    Cost final_cost, std::span<const MatchRewrite> ledger) {
  std::vector<CheckFailure> out;
  const auto n = static_cast<Cost>(demand.size());
  if (final_host.steiner_count() != 0) {
    out.push_back({"steiner elimination",
                   std::to_string(final_host.steiner_count()) +
                       " Steiner nodes remain"});
  }
  if (final_cost - phase1_cost > n - 1) {
    out.push_back({"elimination charge bound",
                   "cost grew by " + std::to_string(final_cost - phase1_cost) +
                       " > n - 1 = " + std::to_string(n - 1)});
  }
  std::vector<std::uint8_t> lost(demand.size(), 0);
  for (const auto& m : ledger) {
    if (lost[m.loser]++) {
      out.push_back({"elimination charge bound",
                     "vertex " + demand.label(m.loser) + " lost twice"});
    }
    if (demand.child_count(m.winner) > demand.child_count(m.loser)) {
      out.push_back({"match rule", "winner " + demand.label(m.winner) +
                                       " has more children than loser " +
                                       demand.label(m.loser)});
    }
  }
  return out;
}

std::vector<CheckFailure> check_guarantees(const DemandTree& demand,
                                           Cost final_cost, Cost lower_bound,
                                           std::optional<Cost> optimum) {
  std::vector<CheckFailure> out;
  const auto n = static_cast<Cost>(demand.size());
  if (final_cost < lower_bound) {
    out.push_back({"lower bound soundness",
                   "cost " + std::to_string(final_cost) + " < lower bound " +
                       std::to_string(lower_bound)});
  }
  if (final_cost > 3 * lower_bound + (n ? n - 1 : 0)) {
    out.push_back({"approximation factor",
                   "cost " + std::to_string(final_cost) +
                       " > 3 * lb + (n - 1) = " +
                       std::to_string(3 * lower_bound + n - 1)});
  }
  if (optimum) {
    if (lower_bound > *optimum) {
      out.push_back({"lower bound soundness",
                     "lower bound " + std::to_string(lower_bound) +
                         " > optimum " + std::to_string(*optimum)});
    }
    if (final_cost > 4 * *optimum) {
      out.push_back({"approximation factor",
                     "cost " + std::to_string(final_cost) + " > 4 * optimum " +
                         std::to_string(*optimum)});
    }
  }
  return out;
}

}  // namespace tbt
