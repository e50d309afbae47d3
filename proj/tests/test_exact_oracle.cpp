#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tbt/bracket_builder.hpp"
#include "tbt/cost_eval.hpp"
#include "tbt/exact_oracle.hpp"
#include "tbt/generators.hpp"
#include "tbt/lower_bounds.hpp"
#include "tbt/solver.hpp"

using namespace tbt;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edges_of(std::span<const NodeId> parent) {
  EdgeSet out;
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] == kNoNode) continue;
    const int a = static_cast<int>(v), b = parent[v];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

// Every tree on 0..n-1 with maximum degree 3, found by trying all parent
// choices for vertices 0..n-2 with n-1 as root and discarding non-trees.
std::set<EdgeSet> all_degree3_trees(int n) {
  std::set<EdgeSet> out;
  std::vector<int> choice(n - 1, 0);
  while (true) {
    std::vector<int> degree(n, 0);
    bool ok = true;
    for (int v = 0; v < n - 1 && ok; ++v) {
      if (choice[v] == v) ok = false;
      ++degree[v];
      ++degree[choice[v]];
    }
    for (int v = 0; v < n && ok; ++v) ok = degree[v] <= 3;
    for (int v = 0; v < n - 1 && ok; ++v) {
      // Following parents must reach the root within n steps.
      int x = v, steps = 0;
      while (x != n - 1 && steps <= n) x = choice[x], ++steps;
      ok = x == n - 1;
    }
    if (ok) {
      EdgeSet e;
      for (int v = 0; v < n - 1; ++v) {
        e.emplace(std::min(v, choice[v]), std::max(v, choice[v]));
      }
      out.insert(e);
    }
    int i = 0;
    while (i < n - 1 && ++choice[i] == n) choice[i++] = 0;
    if (i == n - 1) break;
  }
  return out;
}

// Minimum cost over all those trees, evaluated by BFS.
std::int64_t brute_force_opt(const DemandTree& g) {
  const int n = static_cast<int>(g.size());
  std::int64_t best = -1;
  for (const EdgeSet& e : all_degree3_trees(n)) {
    std::vector<std::vector<NodeId>> adj(n);
    for (auto [a, b] : e) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
      const auto dist = tbt::testing::bfs_distances(adj, v);
      for (NodeId c : g.children(v)) total += dist[c];
    }
    if (best < 0 || total < best) best = total;
  }
  return best;
}

bool max_degree_at_most_3(const UnrootedTree& t) {
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.neighbors(static_cast<NodeId>(v)).size() > 3) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Pruefer decoding") {
  // Sequence (3, 3) on 4 labels: star centred at 3.
  const std::vector<NodeId> seq{3, 3};
  std::vector<NodeId> parent(4);
  decode_pruefer(seq, parent);
  CHECK(parent == std::vector<NodeId>{3, 3, 3, kNoNode});

  const std::vector<NodeId> path{1, 2};
  decode_pruefer(path, parent);
  CHECK(edges_of(parent) == EdgeSet{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("host enumeration counts") {
  auto count = [](std::size_t n) { return enumerate_hosts(n, [](auto) {}); };
  CHECK(count(2) == 1);
  CHECK(count(3) == 3);
  CHECK(count(4) == 16);
  CHECK(count(5) == 120);
  CHECK_THROWS_AS(count(1), OracleTooLarge);
  CHECK_THROWS_AS(count(11), OracleTooLarge);
}

TEST_CASE("host enumeration visits each degree-3 tree exactly once") {
  for (int n = 2; n <= 6; ++n) {
    std::set<EdgeSet> seen;
    std::uint64_t visits = 0;
    enumerate_hosts(static_cast<std::size_t>(n), [&](std::span<const NodeId> p) {
      REQUIRE(p[n - 1] == kNoNode);
      seen.insert(edges_of(p));
      ++visits;
    });
    CHECK(visits == seen.size());
    CHECK(seen == all_degree3_trees(n));
  }
}

TEST_CASE("oracle examples") {
  CHECK(opt_cost(root_at(generate(TreeKind::kPath, 5))).optimum == 4);
  // K_{1,3} already has maximum degree 3, so it is its own optimal host.
  CHECK(opt_cost(root_at(generate(TreeKind::kStar, 4))).optimum == 3);
  // K_{1,4}: three leaves adjacent to the centre, the fourth one hop further.
  CHECK(opt_cost(root_at(generate(TreeKind::kStar, 5))).optimum == 5);
  CHECK(opt_cost(root_at(generate(TreeKind::kPath, 1))).optimum == 0);
  CHECK(opt_cost(root_at(generate(TreeKind::kPath, 2))).optimum == 1);
  CHECK_THROWS_AS(opt_cost(root_at(generate(TreeKind::kPath, 11))), OracleTooLarge);

  const OracleResult star = opt_cost(root_at(generate(TreeKind::kStar, 6)));
  star.host.validate();
  CHECK(evaluate(root_at(generate(TreeKind::kStar, 6)), star.host).total ==
        star.optimum);
}

TEST_CASE("running example subtree at w") {
  const DemandTree g = root_at(parse_edge_list("w 6\nw 7\nw x\nx 8\nx 9\n"));
  const OracleResult opt = opt_cost(g);
  CHECK(opt.optimum == 5);  // max degree 3 already: every edge at distance 1
  const SolveResult alg = solve(g);
  CHECK(alg.report.final_cost <= 4 * opt.optimum);
}

TEST_CASE("oracle agrees with an independent brute force") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 5;  // 2..6
    const UnrootedTree t = seed % 2 ? generate(TreeKind::kRandom, n, seed)
                                    : tbt::testing::random_hub_tree(n, seed);
    const DemandTree g = root_at(t);
    const OracleResult opt = opt_cost(g);
    REQUIRE(opt.optimum == brute_force_opt(g));
    REQUIRE_NOTHROW(opt.host.validate());
    REQUIRE(tbt::testing::bfs_total_cost(g, opt.host) == opt.optimum);
  }
}

TEST_CASE("optimum against the lower bounds") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 3 + seed % 6;  // 3..8
    const UnrootedTree t = seed % 3 == 0 ? generate(TreeKind::kStar, n)
                                         : generate(TreeKind::kRandom, n, seed);
    const DemandTree g = root_at(t);
    const Cost opt = opt_cost(g).optimum;
    REQUIRE(opt >= static_cast<Cost>(n) - 1);
    REQUIRE(opt >= lb_instance(g));
    REQUIRE((opt == static_cast<Cost>(n) - 1) == max_degree_at_most_3(t));
    REQUIRE(solve(g).report.final_cost <= 4 * opt);
  }
}
