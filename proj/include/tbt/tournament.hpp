#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tbt/tree_model.hpp"

namespace tbt {

// Total order on vertices used when two players have equally many children;
// the lower rank wins.
class TieBreak {
 public:
  // Integer labels by value, then other labels by string order.
  static TieBreak lexicographic(const DemandTree& demand);
  static TieBreak by_id(std::size_t vertex_count);

  bool prefers(NodeId a, NodeId b) const { return rank_[a] < rank_[b]; }
  // The same order on a relabeled tree whose vertex i is old vertex order[i].
  TieBreak reordered(std::span<const NodeId> order) const;

 private:
  std::vector<std::uint32_t> rank_;
};

enum class TieBreakKind { kLexicographic, kVertexId };
TieBreakKind parse_tiebreak(std::string_view name);
TieBreak make_tiebreak(TieBreakKind kind, const DemandTree& demand);

struct MatchRewrite {
  NodeId steiner = kNoNode;
  NodeId winner = kNoNode;
  NodeId loser = kNoNode;
  // Child count of the loser; bounds the cost increase of the match.
  std::int64_t charge = 0;
};

class MatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Resolves the Steiner node `steiner` whose children x, y are both vertices
// with at most one child each. The player with fewer demand children wins and
// takes the Steiner node's place, the loser becomes the winner's only child
// and keeps its own child plus the winner's former child.
// Throws MatchError when the node is not ready for a match.
MatchRewrite play_match(HostTree& host, const DemandTree& demand,
                        NodeId steiner, const TieBreak& tiebreak);

using MatchObserver =
    std::function<void(const HostTree& host, const MatchRewrite& match)>;

struct TournamentResult {
  std::vector<MatchRewrite> ledger;
  std::int64_t charge_total = 0;
};

// Eliminates every Steiner node, deepest first, so each match sees two
// players. `observer` runs after every match.
TournamentResult run_tournament(HostTree& host, const DemandTree& demand,
                                const TieBreak& tiebreak,
                                const MatchObserver& observer = {});

// Builds a Steiner-free host without simulating matches: per vertex, the
// child with the fewest children sits directly below it and the others form
// a level-order complete binary tree below that one, fewest children first.
// Each child's own subtree hangs from the shallowest free slot inside the
// child's part of that tree.
HostTree direct_build(const DemandTree& demand, const TieBreak& tiebreak);

}  // namespace tbt
