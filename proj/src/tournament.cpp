#include "tbt/tournament.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <string>

namespace tbt {

namespace {

bool integer_label(const std::string& s, long long& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

TieBreak TieBreak::lexicographic(const DemandTree& demand) {
  const std::size_t n = demand.size();
  TieBreak tb;
  tb.rank_.resize(n);
  bool identity = true;
  for (std::size_t v = 0; v < n && identity; ++v) {
    identity = demand.label(static_cast<NodeId>(v)) == std::to_string(v);
  }
  if (identity) {
    std::iota(tb.rank_.begin(), tb.rank_.end(), 0u);
    return tb;
  }
  std::vector<long long> value(n, 0);
  std::vector<std::uint8_t> numeric(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    numeric[v] = integer_label(demand.label(static_cast<NodeId>(v)), value[v]);
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (numeric[a] != numeric[b]) return numeric[a] > numeric[b];
    if (numeric[a] && value[a] != value[b]) return value[a] < value[b];
    const auto& la = demand.label(a);
    const auto& lb = demand.label(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  for (std::size_t i = 0; i < n; ++i) tb.rank_[order[i]] = static_cast<std::uint32_t>(i);
  return tb;
}

TieBreak TieBreak::by_id(std::size_t vertex_count) {
  TieBreak tb;
  tb.rank_.resize(vertex_count);
  std::iota(tb.rank_.begin(), tb.rank_.end(), 0u);
  return tb;
}

TieBreak TieBreak::reordered(std::span<const NodeId> order) const {
  TieBreak tb;
  tb.rank_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) tb.rank_[i] = rank_[order[i]];
  return tb;
}

TieBreakKind parse_tiebreak(std::string_view name) {
  if (name == "lex" || name == "lexicographic") return TieBreakKind::kLexicographic;
  if (name == "id") return TieBreakKind::kVertexId;
  throw std::invalid_argument("unknown tie-break '" + std::string(name) +
                              "' (expected lex or id)");
}

TieBreak make_tiebreak(TieBreakKind kind, const DemandTree& demand) {
  return kind == TieBreakKind::kLexicographic ? TieBreak::lexicographic(demand)
                                              : TieBreak::by_id(demand.size());
}

MatchRewrite play_match(HostTree& host, const DemandTree& demand,
                        NodeId steiner, const TieBreak& tiebreak) {
  const std::string where = "match at s" + std::to_string(steiner) + ": ";
  if (!host.contains(steiner) || !host.is_steiner(steiner)) {
    throw MatchError(where + "not a live Steiner node");
  }
  const auto kids = host.children(steiner);
  if (kids.size() != 2) {
    throw MatchError(where + "Steiner node has " +
                     std::to_string(kids.size()) + " children");
  }
  const NodeId x = kids[0];
  const NodeId y = kids[1];
  if (host.is_steiner(x) || host.is_steiner(y)) {
    throw MatchError(where + "a player slot is still a Steiner node");
  }
  if (host.child_count(x) > 1 || host.child_count(y) > 1) {
    throw MatchError(where + "a player has two children");
  }

  const auto cx = demand.child_count(x);
  const auto cy = demand.child_count(y);
  const bool x_wins = cx != cy ? cx < cy : tiebreak.prefers(x, y);
  const NodeId winner = x_wins ? x : y;
  const NodeId loser = x_wins ? y : x;
  const NodeId inherited =
      host.child_count(winner) ? host.children(winner)[0] : kNoNode;

  host.unlink(x);
  host.unlink(y);
  if (inherited != kNoNode) host.unlink(inherited);
  host.replace(steiner, winner);
  host.retire(steiner);
  host.link(winner, loser);
  if (inherited != kNoNode) host.link(loser, inherited);

  return {steiner, winner, loser,
          static_cast<std::int64_t>(demand.child_count(loser))};
}

TournamentResult run_tournament(HostTree& host, const DemandTree& demand,
                                const TieBreak& tiebreak,
                                const MatchObserver& observer) {
  std::vector<NodeId> order;
  order.reserve(host.live_count());
  order.push_back(host.root());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId c : host.children(order[head])) order.push_back(c);
  }
  TournamentResult result;
  result.ledger.reserve(host.steiner_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!host.is_steiner(*it)) continue;
    const MatchRewrite m = play_match(host, demand, *it, tiebreak);
    result.charge_total += m.charge;
    result.ledger.push_back(m);
    if (observer) observer(host, m);
  }
  return result;
}

HostTree direct_build(const DemandTree& demand, const TieBreak& tiebreak) {
  const std::size_t n = demand.size();
  HostTree host(n);
  if (n == 0) return host;
  host.set_root(demand.root());

  // attach[p]: node below which p's own subtree (led by p's first player)
  // hangs. capacity counts used child slots while seating one bracket.
  std::vector<NodeId> attach(n, kNoNode);
  std::vector<NodeId> lead(n, kNoNode);
  attach[demand.root()] = demand.root();

  std::vector<NodeId> players;
  std::vector<std::uint8_t> used;
  std::vector<std::size_t> best;  // shallowest heap slot with room, 0 = none
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(i);
    const auto kids = demand.children(v);
    if (kids.empty()) continue;
    players.assign(kids.begin(), kids.end());
    std::sort(players.begin(), players.end(), [&](NodeId a, NodeId b) {
      const auto ca = demand.child_count(a);
      const auto cb = demand.child_count(b);
      return ca != cb ? ca < cb : tiebreak.prefers(a, b);
    });
    lead[v] = players[0];

    // Heap slot j (1-based) holds players[j]; the first player sits above.
    const std::size_t m = players.size() - 1;
    if (m == 0) {
      attach[players[0]] = players[0];
      continue;
    }
    host.link(players[0], players[1]);
    used.assign(m + 1, 0);
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t c = 2 * j; c <= std::min(2 * j + 1, m); ++c) {
        host.link(players[j], players[c]);
        ++used[j];
      }
    }
    best.assign(m + 2, 0);
    auto shallower = [](std::size_t a, std::size_t b) {
      if (a == 0) return b;
      if (b == 0) return a;
      return std::bit_width(a) <= std::bit_width(b) ? a : b;
    };
    auto refresh = [&](std::size_t j) {
      std::size_t b = used[j] < 2 ? j : 0;
      if (2 * j <= m) b = shallower(b, best[2 * j]);
      if (2 * j + 1 <= m) b = shallower(b, best[2 * j + 1]);
      best[j] = b;
    };
    for (std::size_t j = m; j >= 1; --j) {
      refresh(j);
      if (demand.child_count(players[j]) == 0) continue;
      const std::size_t slot = best[j];
      attach[players[j]] = players[slot];
      ++used[slot];
      for (std::size_t k = slot; k >= j; k /= 2) refresh(k);
    }
    if (demand.child_count(players[0]) > 0) attach[players[0]] = players[best[1]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(i);
    if (lead[v] != kNoNode) host.link(attach[v], lead[v]);
  }
  return host;
}

}  // namespace tbt
