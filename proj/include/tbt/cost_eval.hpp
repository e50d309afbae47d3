#pragma once

#include <cstdint>
#include <vector>

#include "tbt/tree_model.hpp"

namespace tbt {

using Cost = std::int64_t;

struct CostBreakdown {
  Cost total = 0;
  // cost_H(u): summed host distance from u to each of its demand children.
  std::vector<Cost> per_vertex;
};

// Number of links on the host path between u and v. O(depth).
// Throws std::out_of_range for ids that are not live nodes of `host`.
Cost distance(const HostTree& host, NodeId u, NodeId v);

// Exact objective over all demand edges, O(n alpha(n)) via offline LCA.
// Throws std::invalid_argument when the host does not cover V(G).
CostBreakdown evaluate(const DemandTree& demand, const HostTree& host);

}  // namespace tbt
