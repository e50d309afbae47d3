#include <map>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tbt/bracket_builder.hpp"
#include "tbt/cost_eval.hpp"
#include "tbt/generators.hpp"
#include "tbt/invariants.hpp"
#include "tbt/lower_bounds.hpp"
#include "tbt/tournament.hpp"

using namespace tbt;
using tbt::testing::bfs_per_vertex_cost;
using tbt::testing::bfs_total_cost;
using tbt::testing::kExampleEdges;

namespace {

// Host parent of every vertex, by label. Child order is irrelevant here.
std::map<std::string, std::string> parent_labels(const DemandTree& g,
                                                 const HostTree& h) {
  std::map<std::string, std::string> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const NodeId p = h.parent(static_cast<NodeId>(v));
    out[g.label(static_cast<NodeId>(v))] = p == kNoNode ? "-" : g.label(p);
  }
  return out;
}

UnrootedTree random_tree(std::uint64_t seed, std::size_t n) {
  return seed % 2 ? tbt::testing::random_hub_tree(n, seed)
                  : tbt::testing::random_attachment_tree(n, seed);
}

}  // namespace

TEST_CASE("running example after the tournament") {
  const DemandTree g = root_at(parse_edge_list(kExampleEdges));
  HostTree h = run_bracket_builder(g);
  const TournamentResult result =
      run_tournament(h, g, TieBreak::lexicographic(g));
  h.validate();
  CHECK(h.steiner_count() == 0);
  CHECK(result.ledger.size() == 8);

  const std::map<std::string, std::string> expected{
      {"r", "-"}, {"v", "r"}, {"w", "v"}, {"u", "w"}, {"6", "w"},
      {"1", "u"}, {"5", "u"}, {"3", "1"}, {"2", "3"}, {"4", "3"},
      {"x", "6"}, {"7", "x"}, {"8", "x"}, {"9", "8"}};
  CHECK(parent_labels(g, h) == expected);

  const auto per_vertex = bfs_per_vertex_cost(g, h);
  const auto t = parse_edge_list(kExampleEdges);
  CHECK(per_vertex[t.find("r")] == 6);
  CHECK(per_vertex[t.find("u")] == 9);
  CHECK(per_vertex[t.find("v")] == 3);
  CHECK(per_vertex[t.find("w")] == 6);
  CHECK(per_vertex[t.find("x")] == 3);
  CHECK(bfs_total_cost(g, h) == 27);
  CHECK(evaluate(g, h).total == 27);
  CHECK(check_structure(g, h).empty());
}

TEST_CASE("each match changes the cost by the winner's child count minus one") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DemandTree g = root_at(random_tree(seed, 2 + seed % 80));
    HostTree h = run_bracket_builder(g);
    const TieBreak tb = TieBreak::lexicographic(g);
    std::int64_t previous = bfs_total_cost(g, h);
    std::vector<std::uint8_t> lost(g.size(), 0);
    run_tournament(h, g, tb, [&](const HostTree& host, const MatchRewrite& m) {
      const std::int64_t now = bfs_total_cost(g, host);
      const auto cw = static_cast<std::int64_t>(g.child_count(m.winner));
      const auto cl = static_cast<std::int64_t>(g.child_count(m.loser));
      REQUIRE(now - previous == cw - 1);
      REQUIRE(now - previous <= cw);
      REQUIRE(cw <= cl);
      REQUIRE(m.charge == cl);
      REQUIRE_FALSE(lost[m.loser]);
      lost[m.loser] = 1;
      REQUIRE(check_structure(g, host).empty());
      REQUIRE_NOTHROW(host.validate());
      previous = now;
    });
    REQUIRE(h.steiner_count() == 0);
  }
}

TEST_CASE("tournament properties on random trees") {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const std::size_t n = 1 + seed % 300;
    const DemandTree g = root_at(random_tree(seed, n));
    HostTree h = run_bracket_builder(g);
    const Cost phase1 = evaluate(g, h).total;
    const TournamentResult r = run_tournament(h, g, TieBreak::lexicographic(g));
    const Cost final_cost = evaluate(g, h).total;
    REQUIRE(final_cost == bfs_total_cost(g, h));
    REQUIRE(final_cost - phase1 <= static_cast<Cost>(n) - 1);
    REQUIRE(final_cost >= static_cast<Cost>(n) - 1);
    REQUIRE(r.charge_total <= static_cast<std::int64_t>(n) - 1);
    REQUIRE(check_elimination(g, h, phase1, final_cost, r.ledger).empty());
    REQUIRE(check_guarantees(g, final_cost, lb_instance(g), std::nullopt).empty());
  }
}

TEST_CASE("play_match rejects nodes that are not ready") {
  const DemandTree g = root_at(parse_edge_list(kExampleEdges));
  HostTree h = run_bracket_builder(g);
  const TieBreak tb = TieBreak::lexicographic(g);
  CHECK_THROWS_AS(play_match(h, g, g.root(), tb), MatchError);
  // Root of r's bracket: its left child is still a Steiner node.
  const NodeId top = h.children(g.root())[0];
  REQUIRE(h.is_steiner(top));
  CHECK_THROWS_AS(play_match(h, g, top, tb), MatchError);
  CHECK_THROWS_AS(play_match(h, g, 999, tb), MatchError);
  // r's left sub-bracket seats u and v; each has one host child, so it is
  // ready. v has fewer demand children and wins.
  const NodeId left = h.children(top)[0];
  const MatchRewrite m = play_match(h, g, left, tb);
  CHECK(g.label(m.winner) == "v");
  CHECK(g.label(m.loser) == "u");
  CHECK_FALSE(h.contains(left));
  CHECK_THROWS_AS(play_match(h, g, left, tb), MatchError);
}

TEST_CASE("tie-break order") {
  const DemandTree g = root_at(parse_edge_list("r 10\nr 9\nr a\nr B\n"));
  const auto t = parse_edge_list("r 10\nr 9\nr a\nr B\n");
  const TieBreak lex = TieBreak::lexicographic(g);
  CHECK(lex.prefers(t.find("9"), t.find("10")));
  CHECK(lex.prefers(t.find("10"), t.find("B")));
  CHECK(lex.prefers(t.find("B"), t.find("a")));
  CHECK_FALSE(lex.prefers(t.find("a"), t.find("B")));

  const TieBreak id = TieBreak::by_id(g.size());
  CHECK(id.prefers(t.find("10"), t.find("9")));

  CHECK(parse_tiebreak("lex") == TieBreakKind::kLexicographic);
  CHECK(parse_tiebreak("lexicographic") == TieBreakKind::kLexicographic);
  CHECK(parse_tiebreak("id") == TieBreakKind::kVertexId);
  CHECK_THROWS_AS(parse_tiebreak("random"), std::invalid_argument);
}

TEST_CASE("tie-break decides equal child counts") {
  // Star: all players are leaves, so every match is a tie.
  const DemandTree g = root_at(generate(TreeKind::kStar, 5));
  HostTree h = run_bracket_builder(g);
  const auto r = run_tournament(h, g, TieBreak::lexicographic(g));
  for (const auto& m : r.ledger) CHECK(m.winner < m.loser);
  CHECK(evaluate(g, h).total == 1 + 2 + 3 + 3);
}

TEST_CASE("direct build gives a valid host within the same charge bound") {
  std::size_t same_cost = 0, cheaper = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 1 + seed % 250;
    const DemandTree g = root_at(random_tree(seed, n));
    const TieBreak tb = TieBreak::lexicographic(g);
    const HostTree direct = direct_build(g, tb);
    REQUIRE_NOTHROW(direct.validate());
    REQUIRE(direct.steiner_count() == 0);
    REQUIRE(direct.live_count() == n);

    HostTree h = run_bracket_builder(g);
    const Cost phase1 = evaluate(g, h).total;
    run_tournament(h, g, tb);
    const Cost direct_cost = bfs_total_cost(g, direct);
    REQUIRE(direct_cost == evaluate(g, direct).total);
    REQUIRE(direct_cost <= phase1 + static_cast<Cost>(n) - 1);
    REQUIRE(direct_cost <= 3 * lb_instance(g) + static_cast<Cost>(n) - 1);
    const Cost simulated = evaluate(g, h).total;
    same_cost += direct_cost == simulated;
    cheaper += direct_cost < simulated;
    ++total;
  }
  MESSAGE("direct build: same cost on " << same_cost << ", cheaper on "
          << cheaper << " of " << total << " trees");
}

TEST_CASE("direct build on the small examples") {
  const DemandTree g = root_at(parse_edge_list(kExampleEdges));
  const HostTree h = direct_build(g, TieBreak::lexicographic(g));
  CHECK(bfs_total_cost(g, h) == 27);
  CHECK(check_structure(g, h).empty());

  const DemandTree star = root_at(generate(TreeKind::kStar, 5));
  const HostTree hs = direct_build(star, TieBreak::lexicographic(star));
  CHECK(hs.parent(1) == 0);
  CHECK(hs.parent(2) == 1);
  CHECK(hs.parent(3) == 2);
  CHECK(hs.parent(4) == 2);

  const DemandTree path = root_at(generate(TreeKind::kPath, 7));
  const HostTree hp = direct_build(path, TieBreak::lexicographic(path));
  for (NodeId v = 1; v < 7; ++v) CHECK(hp.parent(v) == v - 1);
}

TEST_CASE("charge bound on trees with up to ten thousand vertices") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const std::size_t n = 2000 + seed * 347;  // up to 9981
    const DemandTree g = root_at(seed % 3 == 0
                                     ? generate(TreeKind::kRandom, n, seed)
                                     : random_tree(seed, n));
    HostTree h = run_bracket_builder(g);
    const Cost before = evaluate(g, h).total;
    const TournamentResult r = run_tournament(h, g, TieBreak::lexicographic(g));
    const Cost after = evaluate(g, h).total;
    REQUIRE(after - before <= static_cast<Cost>(n) - 1);
    REQUIRE(check_elimination(g, h, before, after, r.ledger).empty());
  }
  // A caterpillar has many one-child vertices next to leaves.
  const DemandTree cat = root_at(generate(TreeKind::kCaterpillar, 10000));
  HostTree h = run_bracket_builder(cat);
  const Cost before = evaluate(cat, h).total;
  run_tournament(h, cat, TieBreak::lexicographic(cat));
  CHECK(evaluate(cat, h).total - before <= 9999);
}
