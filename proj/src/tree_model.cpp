#include "tbt/tree_model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tbt {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate edge";
    case ParseErrorKind::kCycle: return "cycle";
    case ParseErrorKind::kDisconnected: return "disconnected";
    case ParseErrorKind::kEmpty: return "empty input";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line,
                       const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) +
                         (line ? " at line " + std::to_string(line) : "") +
                         ": " + what),
      kind_(kind),
      line_(line) {}

namespace {

class DisjointSets {
 public:
  NodeId add() {
    parent_.push_back(static_cast<NodeId>(parent_.size()));
    return parent_.back();
  }
  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<NodeId> parent_;
};

// Canonical non-negative decimal ("0", "17"; not "007" or "+3").
bool canonical_index(std::string_view token, std::size_t& value) {
  if (token.empty() || token.size() > 18) return false;
  if (token.size() > 1 && token.front() == '0') return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

}  // namespace

UnrootedTree::UnrootedTree(std::vector<std::string> labels,
                           std::vector<std::pair<NodeId, NodeId>> edges,
                           NodeId first_vertex)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      first_vertex_(first_vertex) {
  const std::size_t n = labels_.size();
  offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
}

NodeId UnrootedTree::find(std::string_view label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return static_cast<NodeId>(v);
  }
  return kNoNode;
}

UnrootedTree parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string_view, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> seen_edges;
  DisjointSets components;

  // Keys of `ids` view into the input text, which outlives this function.
  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) {
      labels.emplace_back(token);
      components.add();
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::string_view tokens[3];
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (count == 3) break;
      tokens[count++] = line.substr(i, j - i);
      i = j;
    }
    if (count == 0) continue;
    if (count == 3) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected one or two tokens");
    }
    if (count == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(ParseErrorKind::kSelfLoop, line_no,
                       "vertex '" + std::string(tokens[0]) + "'");
    }
    NodeId u = intern(tokens[0]);
    NodeId v = intern(tokens[1]);
    auto lo = static_cast<std::uint64_t>(std::min(u, v));
    auto hi = static_cast<std::uint64_t>(std::max(u, v));
    if (!seen_edges.insert((lo << 32) | hi).second) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       std::string(tokens[0]) + " " + std::string(tokens[1]));
    }
    if (!components.unite(u, v)) {
      throw ParseError(ParseErrorKind::kCycle, line_no,
                       std::string(tokens[0]) + " " + std::string(tokens[1]) +
                           " closes a cycle");
    }
    edges.emplace_back(u, v);
  }

  const std::size_t n = labels.size();
  if (n == 0) throw ParseError(ParseErrorKind::kEmpty, 0, "no vertices");
  if (edges.size() != n - 1) {
    throw ParseError(ParseErrorKind::kDisconnected, 0,
                     std::to_string(n) + " vertices but " +
                         std::to_string(edges.size()) + " edges");
  }

  // Integer labels that are exactly 0..n-1 keep their value as id.
  std::vector<NodeId> remap(n);
  bool by_value = true;
  std::vector<std::uint8_t> hit(n, 0);
  for (std::size_t v = 0; v < n && by_value; ++v) {
    std::size_t value = 0;
    if (!canonical_index(labels[v], value) || value >= n || hit[value]) {
      by_value = false;
      break;
    }
    hit[value] = 1;
    remap[v] = static_cast<NodeId>(value);
  }
  if (!by_value) return UnrootedTree(std::move(labels), std::move(edges), 0);

  std::vector<std::string> ordered(n);
  for (std::size_t v = 0; v < n; ++v) ordered[remap[v]] = std::move(labels[v]);
  for (auto& [u, v] : edges) {
    u = remap[u];
    v = remap[v];
  }
  return UnrootedTree(std::move(ordered), std::move(edges), remap[0]);
}

std::string format_edge_list(const UnrootedTree& tree) {
  std::string out;
  if (tree.size() == 1) return tree.label(0) + "\n";
  for (auto [u, v] : tree.edges()) {
    out += tree.label(u);
    out += ' ';
    out += tree.label(v);
    out += '\n';
  }
  return out;
}

DemandTree root_at(const UnrootedTree& tree, NodeId root) {
  const std::size_t n = tree.size();
  if (root < 0 || static_cast<std::size_t>(root) >= n) {
    throw std::out_of_range("unknown root vertex " + std::to_string(root));
  }
  DemandTree g;
  g.root_ = root;
  g.parent_.assign(n, kNoNode);
  g.labels_.assign(tree.labels().begin(), tree.labels().end());
  g.bfs_order_.reserve(n);
  g.child_offsets_.assign(n + 1, 0);
  g.child_list_.reserve(n ? n - 1 : 0);

  std::vector<std::uint8_t> visited(n, 0);
  visited[root] = 1;
  g.bfs_order_.push_back(root);
  for (std::size_t head = 0; head < g.bfs_order_.size(); ++head) {
    NodeId v = g.bfs_order_[head];
    for (NodeId w : tree.neighbors(v)) {
      if (visited[w]) continue;
      visited[w] = 1;
      g.parent_[w] = v;
      g.bfs_order_.push_back(w);
    }
  }
  // Children in adjacency order, laid out per vertex.
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t c = tree.neighbors(static_cast<NodeId>(v)).size() -
                    (static_cast<NodeId>(v) == root ? 0 : 1);
    g.child_offsets_[v + 1] = c;
    g.max_child_count_ = std::max(g.max_child_count_, c);
    if (c == 0) ++g.leaf_count_;
  }
  std::partial_sum(g.child_offsets_.begin(), g.child_offsets_.end(),
                   g.child_offsets_.begin());
  g.child_list_.resize(g.child_offsets_[n]);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t at = g.child_offsets_[v];
    for (NodeId w : tree.neighbors(static_cast<NodeId>(v))) {
      if (g.parent_[w] == static_cast<NodeId>(v)) g.child_list_[at++] = w;
    }
  }
  return g;
}

DemandTree relabel_bfs(const DemandTree& demand) {
  const std::size_t n = demand.size();
  const auto order = demand.bfs_order();
  DemandTree g;
  g.root_ = n ? 0 : kNoNode;
  g.leaf_count_ = demand.leaf_count_;
  g.max_child_count_ = demand.max_child_count_;
  g.parent_.assign(n, kNoNode);
  g.labels_.resize(n);
  g.bfs_order_.resize(n);
  g.child_offsets_.assign(n + 1, 0);
  g.child_list_.resize(n ? n - 1 : 0);
  // In BFS order the children of vertex i are the next child_count(i)
  // positions after those of vertex i-1.
  std::size_t next = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    g.bfs_order_[i] = static_cast<NodeId>(i);
    g.labels_[i] = demand.labels_[v];
    const std::size_t c = demand.child_count(v);
    g.child_offsets_[i + 1] = g.child_offsets_[i] + c;
    for (std::size_t k = 0; k < c; ++k, ++next) {
      g.parent_[next] = static_cast<NodeId>(i);
      g.child_list_[next - 1] = static_cast<NodeId>(next);
    }
  }
  return g;
}

HostTree::HostTree(std::size_t vertex_count)
    : vertex_count_(vertex_count),
      root_(vertex_count ? 0 : kNoNode),
      nodes_(vertex_count) {}

NodeId HostTree::add_steiner(NodeId owner) {
  auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{});
  nodes_.back().owner = owner;
  ++steiner_live_;
  return id;
}

void HostTree::link(NodeId parent, NodeId child) {
  Node& p = nodes_[parent];
  if (p.child_count == 2) {
    throw std::logic_error("node " + std::to_string(parent) +
                           " already has two children");
  }
  if (nodes_[child].parent != kNoNode) {
    throw std::logic_error("node " + std::to_string(child) + " is attached");
  }
  p.children[p.child_count++] = child;
  nodes_[child].parent = parent;
}

void HostTree::unlink(NodeId child) {
  const NodeId p = nodes_[child].parent;
  if (p == kNoNode) return;
  auto& slots = nodes_[p].children;
  if (slots[0] == child) slots[0] = slots[1];
  slots[1] = kNoNode;
  --nodes_[p].child_count;
  nodes_[child].parent = kNoNode;
}

void HostTree::replace(NodeId old, NodeId replacement) {
  if (nodes_[replacement].parent != kNoNode) {
    throw std::logic_error("node " + std::to_string(replacement) +
                           " is attached");
  }
  const NodeId p = nodes_[old].parent;
  if (p == kNoNode) {
    if (root_ == old) root_ = replacement;
    return;
  }
  auto& slots = nodes_[p].children;
  (slots[0] == old ? slots[0] : slots[1]) = replacement;
  nodes_[replacement].parent = p;
  nodes_[old].parent = kNoNode;
}

void HostTree::retire(NodeId steiner) {
  if (!is_steiner(steiner) || nodes_[steiner].retired) {
    throw std::logic_error("only live Steiner nodes can be retired");
  }
  if (nodes_[steiner].parent != kNoNode || nodes_[steiner].child_count != 0 ||
      root_ == steiner) {
    throw std::logic_error("Steiner node must be detached before retiring");
  }
  nodes_[steiner].retired = 1;
  --steiner_live_;
}

void HostTree::validate() const {
  auto fail = [](const std::string& what) {
    throw std::logic_error("invalid host tree: " + what);
  };
  if (vertex_count_ == 0) fail("no vertices");
  if (!contains(root_)) fail("root is not a live node");
  if (nodes_[root_].parent != kNoNode) fail("root has a parent");
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].retired) continue;
    auto node = static_cast<NodeId>(id);
    for (NodeId c : children(node)) {
      if (!contains(c)) fail("dangling child of " + std::to_string(id));
      if (nodes_[c].parent != node) fail("inconsistent parent of " + std::to_string(c));
    }
    if (node != root_ && !contains(nodes_[node].parent)) {
      fail("node " + std::to_string(id) + " is detached");
    }
  }
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (++reached > live_count()) fail("cycle");
    for (NodeId c : children(v)) stack.push_back(c);
  }
  if (reached != live_count()) fail("unreachable nodes");
}

}  // namespace tbt
