#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbt/cost_eval.hpp"
#include "tbt/tournament.hpp"
#include "tbt/tree_model.hpp"

namespace tbt {

// Structural invariants that hold after bracket building and after every
// match of the tournament:
//   (i)   every Steiner node has two children;
//   (ii)  the demand parent of every vertex is a host ancestor of it;
//   (iii) a vertex hanging from a Steiner node of v's bracket is a demand
//         child of v and has at most one host child.
enum class Invariant { kSteinerArity, kParentIsAncestor, kSteinerChildShape };

std::string_view describe(Invariant invariant);

struct Violation {
  Invariant invariant;
  NodeId node = kNoNode;
  std::string detail;
};

// All violations, O(n). Steiner owners are taken from the host's tags.
std::vector<Violation> check_structure(const DemandTree& demand,
                                       const HostTree& host);

// A failed property check: `check` names the property.
struct CheckFailure {
  std::string check;
  std::string detail;
};

// After bracket building: cost_H(v) <= c_v(ceil(log c_v) + 1) for every
// vertex, and exactly (leaves - 1) Steiner nodes.
std::vector<CheckFailure> check_bracket_phase(const DemandTree& demand,
                                              const HostTree& phase1,
                                              const CostBreakdown& cost);

// After the tournament: no Steiner node left, total increase <= n - 1, no
// vertex loses twice, every winner has at most as many children as its loser.
std::vector<CheckFailure> check_elimination(
    const DemandTree& demand, const HostTree& final_host, Cost phase1_cost,
    Cost final_cost, std::span<const MatchRewrite> ledger);

// Approximation chain: lb <= final <= 3*lb + (n-1), and with an exact
// optimum lb <= opt and final <= 4*opt.
std::vector<CheckFailure> check_guarantees(const DemandTree& demand,
                                           Cost final_cost, Cost lower_bound,
                                           std::optional<Cost> optimum);

}  // namespace tbt
