#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "tbt/cost_eval.hpp"
#include "tbt/tree_model.hpp"

namespace tbt {

inline constexpr std::size_t kOracleMaxVertices = 10;

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Decodes a Pruefer sequence over labels 0..n-1 (n = seq.size() + 2) into a
// parent array rooted at n-1: parent[n-1] == kNoNode.
void decode_pruefer(std::span<const NodeId> seq, std::span<NodeId> parent);

// Visits every labeled tree on 0..n-1 with maximum degree 3 exactly once, as
// a parent array rooted at n-1, in lexicographic order of Pruefer sequences.
// Returns the number of trees visited. Needs 2 <= n <= kOracleMaxVertices.
std::uint64_t enumerate_hosts(
    std::size_t n, const std::function<void(std::span<const NodeId>)>& visit);

struct OracleResult {
  Cost optimum = 0;
  HostTree host;  // first optimum in enumeration order
};

// Exact minimum over all binary host trees on V(G).
// Throws OracleTooLarge above kOracleMaxVertices vertices.
OracleResult opt_cost(const DemandTree& demand);

}  // namespace tbt
