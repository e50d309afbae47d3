#include "tbt/cost_eval.hpp"

#include <stdexcept>
#include <string>

namespace tbt {

namespace {

Cost depth_of(const HostTree& host, NodeId v) {
  Cost d = 0;
  for (NodeId p = host.parent(v); p != kNoNode; p = host.parent(p)) ++d;
  return d;
}

}  // namespace

Cost distance(const HostTree& host, NodeId u, NodeId v) {
  if (!host.contains(u) || !host.contains(v)) {
    throw std::out_of_range("distance: unknown node");
  }
  Cost du = depth_of(host, u);
  Cost dv = depth_of(host, v);
  Cost hops = 0;
  for (; du > dv; --du, ++hops) u = host.parent(u);
  for (; dv > du; --dv, ++hops) v = host.parent(v);
  while (u != v) {
    u = host.parent(u);
    v = host.parent(v);
    hops += 2;
  }
  return hops;
}

namespace {

// General case: Tarjan's offline LCA.
CostBreakdown evaluate_lca(const DemandTree& demand, const HostTree& host) {
  const std::size_t n = demand.size();
  CostBreakdown out;
  out.per_vertex.assign(n, 0);

  // Queries are the demand edges
  // (parent(v), v), answered when the later of the two endpoints finishes.
  const std::size_t slots = host.slot_count();
  std::vector<NodeId> dsu(slots);
  std::vector<NodeId> anchor(slots, kNoNode);
  std::vector<std::int32_t> depth(slots, 0);
  std::vector<std::uint8_t> done(slots, 0);
  auto find = [&](NodeId x) {
    NodeId r = x;
    while (dsu[r] != r) r = dsu[r];
    while (dsu[x] != r) {
      NodeId next = dsu[x];
      dsu[x] = r;
      x = next;
    }
    return r;
  };
  auto answer = [&](NodeId u, NodeId w, NodeId charged) {
    if (!done[w]) return;
    NodeId lca = anchor[find(w)];
    out.per_vertex[charged] += depth[u] + depth[w] - 2 * depth[lca];
  };

  struct Frame {
    NodeId node;
    std::uint8_t next_child;
  };
  std::vector<Frame> stack;
  stack.push_back({host.root(), 0});
  dsu[host.root()] = host.root();
  anchor[host.root()] = host.root();
  std::size_t visited_vertices = 0;
  while (!stack.empty()) {
    Frame& top = stack.back();
    NodeId u = top.node;
    auto kids = host.children(u);
    if (top.next_child < kids.size()) {
      NodeId c = kids[top.next_child++];
      dsu[c] = c;
      anchor[c] = c;
      depth[c] = depth[u] + 1;
      stack.push_back({c, 0});
      continue;
    }
    done[u] = 1;
    if (!host.is_steiner(u)) {
      ++visited_vertices;
      if (NodeId p = demand.parent(u); p != kNoNode) answer(u, p, p);
      for (NodeId c : demand.children(u)) answer(u, c, u);
    }
    stack.pop_back();
    if (!stack.empty()) {
      NodeId p = stack.back().node;
      dsu[find(u)] = find(p);
      anchor[find(p)] = p;
    }
  }
  if (visited_vertices != n) {
    throw std::invalid_argument("host tree does not reach every vertex");
  }
  for (Cost c : out.per_vertex) out.total += c;
  return out;
}


}  // namespace

CostBreakdown evaluate(const DemandTree& demand, const HostTree& host) {
  const std::size_t n = demand.size();
  if (host.vertex_count() != n) {
    throw std::invalid_argument("host covers " +
                                std::to_string(host.vertex_count()) +
                                " vertices, demand tree has " +
                                std::to_string(n));
  }
  CostBreakdown out;
  out.per_vertex.assign(n, 0);
  if (n <= 1) return out;

  // Hosts built here keep every demand parent above its child, so each demand
  // edge costs a depth difference. Preorder numbering answers the ancestor
  // test; anything else goes through the general LCA path.
  struct Place {
    std::int32_t tin;
    std::int32_t size;
    std::int32_t depth;
  };
  const std::size_t slots = host.slot_count();
  std::vector<Place> place(slots, Place{-1, 1, 0});
  std::vector<NodeId> order;
  order.reserve(host.live_count());
  std::vector<NodeId> stack{host.root()};
  std::size_t visited_vertices = 0;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    place[u].tin = static_cast<std::int32_t>(order.size());
    order.push_back(u);
    if (!host.is_steiner(u)) ++visited_vertices;
    for (NodeId c : host.children(u)) {
      place[c].depth = place[u].depth + 1;
      stack.push_back(c);
    }
  }
  if (visited_vertices != n) {
    throw std::invalid_argument("host tree does not reach every vertex");
  }
  for (std::size_t i = order.size(); i-- > 1;) {
    const NodeId u = order[i];
    place[host.parent(u)].size += place[u].size;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(i);
    const NodeId p = demand.parent(v);
    if (p == kNoNode) continue;
    const Place& pp = place[p];
    const Place& pv = place[v];
    if (pv.tin < pp.tin || pv.tin >= pp.tin + pp.size) {
      return evaluate_lca(demand, host);
    }
    out.per_vertex[p] += pv.depth - pp.depth;
  }
  for (Cost c : out.per_vertex) out.total += c;
  return out;
}

}  // namespace tbt
