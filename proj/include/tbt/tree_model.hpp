#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbt {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class ParseErrorKind {
  kMalformedLine,
  kSelfLoop,
  kDuplicateEdge,
  kCycle,
  kDisconnected,
  kEmpty,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based input line, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

// Undirected tree with dense vertex ids and the original token of every vertex.
// Adjacency lists keep input order so rooting is deterministic.
class UnrootedTree {
 public:
  UnrootedTree() = default;
  UnrootedTree(std::vector<std::string> labels,
               std::vector<std::pair<NodeId, NodeId>> edges,
               NodeId first_vertex = 0);

  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::pair<NodeId, NodeId>> edges() const noexcept {
    return edges_;
  }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const noexcept { return labels_; }
  // Vertex named by the first token of the input; the default root.
  NodeId first_vertex() const noexcept { return first_vertex_; }
  // Vertex id for a label, or kNoNode.
  NodeId find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  NodeId first_vertex_ = 0;
};

// Parses the edge-list format: one "u v" pair per line, '#' starts a comment,
// a line holding a single token declares a vertex (needed for n = 1).
// Labels are mapped to ids 0..n-1 by value when they are exactly the integers
// 0..n-1, otherwise by order of first appearance.
UnrootedTree parse_edge_list(std::string_view text);

// Inverse of parse_edge_list for trees whose labels contain no whitespace.
std::string format_edge_list(const UnrootedTree& tree);

// Rooted demand tree G. Children are stored in CSR form.
class DemandTree {
 public:
  DemandTree() = default;

  std::size_t size() const noexcept { return parent_.size(); }
  NodeId root() const noexcept { return root_; }
  // kNoNode for the root.
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_offsets_[v],
            child_list_.data() + child_offsets_[v + 1]};
  }
  std::size_t child_count(NodeId v) const {
    return child_offsets_[v + 1] - child_offsets_[v];
  }
  // Vertices in breadth-first order from the root.
  std::span<const NodeId> bfs_order() const noexcept { return bfs_order_; }
  // Childless vertices. A single vertex counts as one leaf.
  std::size_t leaf_count() const noexcept { return leaf_count_; }
  std::size_t max_child_count() const noexcept { return max_child_count_; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend DemandTree root_at(const UnrootedTree& tree, NodeId root);
  friend DemandTree relabel_bfs(const DemandTree& demand);

 private:
  NodeId root_ = kNoNode;
  std::vector<NodeId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<NodeId> child_list_;
  std::vector<NodeId> bfs_order_;
  std::vector<std::string> labels_;
  std::size_t leaf_count_ = 0;
  std::size_t max_child_count_ = 0;
};

// Orients every edge away from `root`. Children keep adjacency (input) order.
// Throws std::out_of_range for an unknown root.
DemandTree root_at(const UnrootedTree& tree, NodeId root);

inline DemandTree root_at(const UnrootedTree& tree) {
  return root_at(tree, tree.first_vertex());
}

// The same tree with vertex i standing for demand.bfs_order()[i], labels
// carried along. Children keep their order and get consecutive ids, which
// keeps the solver's memory accesses close together.
DemandTree relabel_bfs(const DemandTree& demand);

// Binary host tree H. Ids 0..vertex_count()-1 are the vertices of G, larger
// ids are Steiner nodes. Retired Steiner nodes keep their id but are no
// longer part of the tree.
class HostTree {
 public:
  HostTree() = default;
  explicit HostTree(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  // Number of ids ever allocated, live or retired.
  std::size_t slot_count() const noexcept { return nodes_.size(); }
  std::size_t live_count() const noexcept { return vertex_count_ + steiner_live_; }
  std::size_t steiner_count() const noexcept { return steiner_live_; }

  bool contains(NodeId id) const noexcept {
    return id >= 0 && static_cast<std::size_t>(id) < nodes_.size() &&
           !nodes_[id].retired;
  }
  bool is_steiner(NodeId id) const noexcept {
    return static_cast<std::size_t>(id) >= vertex_count_;
  }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId id) const { return nodes_[id].parent; }
  std::span<const NodeId> children(NodeId id) const {
    return {nodes_[id].children.data(), nodes_[id].child_count};
  }
  std::size_t child_count(NodeId id) const { return nodes_[id].child_count; }
  // Vertex whose bracket a Steiner node belongs to; kNoNode for vertices.
  NodeId owner(NodeId id) const { return nodes_[id].owner; }

  // Room for `slots` ids in total, so add_steiner does not reallocate.
  void reserve(std::size_t slots) { nodes_.reserve(slots); }
  NodeId add_steiner(NodeId owner);
  void set_owner(NodeId steiner, NodeId owner) { nodes_[steiner].owner = owner; }
  void set_root(NodeId id) { root_ = id; }
  // Appends `child` to the children of `parent`. `child` must be detached.
  void link(NodeId parent, NodeId child);
  // Detaches `child` from its parent; no-op for a detached node.
  void unlink(NodeId child);
  // Puts `replacement` into the child slot `old` occupies. `replacement` must
  // be detached; `old` becomes detached.
  void replace(NodeId old, NodeId replacement);
  // Removes a detached, childless Steiner node from the tree.
  void retire(NodeId steiner);

  // Checks the structural contract: binary, single root, every live node
  // reachable, parent/child links consistent. Throws std::logic_error.
  void validate() const;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t steiner_live_ = 0;
  NodeId root_ = kNoNode;
  // One record per id keeps a node's links in a single cache line.
  struct Node {
    NodeId parent = kNoNode;
    std::array<NodeId, 2> children{kNoNode, kNoNode};
    NodeId owner = kNoNode;
    std::uint8_t child_count = 0;
    std::uint8_t retired = 0;
  };
  std::vector<Node> nodes_;
};

}  // namespace tbt
