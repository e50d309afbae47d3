#include "tbt/exact_oracle.hpp"

#include <array>
#include <limits>
#include <string>
#include <vector>

namespace tbt {

void decode_pruefer(std::span<const NodeId> seq, std::span<NodeId> parent) {
  const std::size_t n = seq.size() + 2;
  std::array<std::uint8_t, 64> degree_small{};
  std::vector<std::uint8_t> degree_large;
  std::uint8_t* degree = degree_small.data();
  if (n > degree_small.size()) {
    degree_large.assign(n, 0);
    degree = degree_large.data();
  }
  for (std::size_t v = 0; v < n; ++v) degree[v] = 1;
  for (NodeId v : seq) ++degree[v];

  // Linear-time decode: `leaf` is the smallest current leaf.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (NodeId next : seq) {
    parent[leaf] = next;
    if (--degree[next] == 1 && static_cast<std::size_t>(next) < ptr) {
      leaf = static_cast<std::size_t>(next);
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  parent[leaf] = static_cast<NodeId>(n - 1);
  parent[n - 1] = kNoNode;
}

std::uint64_t enumerate_hosts(
    std::size_t n, const std::function<void(std::span<const NodeId>)>& visit) {
  if (n < 2 || n > kOracleMaxVertices) {
    throw OracleTooLarge("host enumeration supports 2 <= n <= " +
                         std::to_string(kOracleMaxVertices) + ", got " +
                         std::to_string(n));
  }
  const std::size_t len = n - 2;
  std::array<NodeId, kOracleMaxVertices> seq{};
  std::array<NodeId, kOracleMaxVertices> parent{};
  std::array<std::uint8_t, kOracleMaxVertices> used{};
  std::uint64_t count = 0;

  // Depth-first over sequence positions; a label may appear at most twice,
  // which is exactly degree <= 3.
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == len) {
      decode_pruefer({seq.data(), len}, {parent.data(), n});
      ++count;
      visit({parent.data(), n});
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] == 2) continue;
      ++used[v];
      seq[pos] = static_cast<NodeId>(v);
      extend(pos + 1);
      --used[v];
    }
  };
  extend(0);
  return count;
}

OracleResult opt_cost(const DemandTree& demand) {
  const std::size_t n = demand.size();
  if (n > kOracleMaxVertices) {
    throw OracleTooLarge("oracle supports at most " +
                         std::to_string(kOracleMaxVertices) +
                         " vertices, got " + std::to_string(n));
  }
  OracleResult result;
  if (n <= 1) {
    result.host = HostTree(n);
    return result;
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t v = 0; v < n; ++v) {
    if (NodeId p = demand.parent(static_cast<NodeId>(v)); p != kNoNode) {
      edges.emplace_back(p, static_cast<NodeId>(v));
    }
  }

  Cost best = std::numeric_limits<Cost>::max();
  std::array<NodeId, kOracleMaxVertices> best_parent{};
  std::array<std::int32_t, kOracleMaxVertices> depth{};
  enumerate_hosts(n, [&](std::span<const NodeId> parent) {
    for (std::size_t v = 0; v < n; ++v) {
      std::int32_t d = 0;
      for (NodeId p = parent[v]; p != kNoNode; p = parent[p]) ++d;
      depth[v] = d;
    }
    Cost total = 0;
    for (auto [a, b] : edges) {
      std::int32_t da = depth[a], db = depth[b];
      Cost hops = 0;
      for (; da > db; --da, ++hops) a = parent[a];
      for (; db > da; --db, ++hops) b = parent[b];
      while (a != b) {
        a = parent[a];
        b = parent[b];
        hops += 2;
      }
      total += hops;
      if (total >= best) return;
    }
    best = total;
    std::copy(parent.begin(), parent.end(), best_parent.begin());
  });

  // Re-root at the smallest vertex of degree <= 2 so the tree is binary.
  std::vector<std::vector<NodeId>> adj(n);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    adj[v].push_back(best_parent[v]);
    adj[best_parent[v]].push_back(static_cast<NodeId>(v));
  }
  NodeId root = 0;
  while (adj[root].size() > 2) ++root;
  HostTree host(n);
  host.set_root(root);
  std::vector<NodeId> queue{root};
  std::vector<std::uint8_t> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : adj[queue[head]]) {
      if (seen[w]) continue;
      seen[w] = 1;
      host.link(queue[head], w);
      queue.push_back(w);
    }
  }
  result.optimum = best;
  result.host = std::move(host);
  return result;
}

}  // namespace tbt
