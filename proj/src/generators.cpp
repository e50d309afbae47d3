#include "tbt/generators.hpp"

#include <bit>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "tbt/exact_oracle.hpp"

namespace tbt {

TreeKind parse_tree_kind(std::string_view name) {
  if (name == "path") return TreeKind::kPath;
  if (name == "star") return TreeKind::kStar;
  if (name == "caterpillar") return TreeKind::kCaterpillar;
  if (name == "complete_binary") return TreeKind::kCompleteBinary;
  if (name == "random") return TreeKind::kRandom;
  throw std::invalid_argument("unknown tree kind '" + std::string(name) + "'");
}

std::string_view to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kPath: return "path";
    case TreeKind::kStar: return "star";
    case TreeKind::kCaterpillar: return "caterpillar";
    case TreeKind::kCompleteBinary: return "complete_binary";
    case TreeKind::kRandom: return "random";
  }
  return "unknown";
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Edges of the tree encoded by `seq`, in decoding order.
std::vector<std::pair<NodeId, NodeId>> pruefer_edges(
    const std::vector<NodeId>& seq, std::size_t n) {
  std::vector<NodeId> parent(n);
  decode_pruefer(seq, parent);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(parent[v], static_cast<NodeId>(v));
  }
  return edges;
}

}  // namespace

UnrootedTree generate(TreeKind kind, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  if (n > static_cast<std::size_t>(std::numeric_limits<NodeId>::max() / 2)) {
    throw std::invalid_argument("tree too large");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  auto id = [](std::size_t i) { return static_cast<NodeId>(i); };
  switch (kind) {
    case TreeKind::kPath:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id(i - 1), id(i));
      break;
    case TreeKind::kStar:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, id(i));
      break;
    case TreeKind::kCaterpillar: {
      const std::size_t spine = (n + 1) / 2;
      for (std::size_t i = 1; i < spine; ++i) edges.emplace_back(id(i - 1), id(i));
      for (std::size_t i = spine; i < n; ++i) {
        edges.emplace_back(id((i - spine) % spine), id(i));
      }
      break;
    }
    case TreeKind::kCompleteBinary:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(id((i - 1) / 2), id(i));
      break;
    case TreeKind::kRandom: {
      if (n <= 2) {
        if (n == 2) edges.emplace_back(0, 1);
        break;
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<NodeId> pick(0, id(n - 1));
      std::vector<NodeId> seq(n - 2);
      for (auto& s : seq) s = pick(rng);
      edges = pruefer_edges(seq, n);
      break;
    }
  }
  return UnrootedTree(numeric_labels(n), std::move(edges), 0);
}

KeyedPath bst_adversarial(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("adversarial path needs an even n >= 4, got " +
                                std::to_string(n));
  }
  KeyedPath out{generate(TreeKind::kPath, n), std::vector<std::int64_t>(n)};
  const auto half = static_cast<std::int64_t>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::int64_t>(i / 2);
    out.key[i] = i % 2 == 0 ? k + 1 : half + k + 1;
  }
  return out;
}

HostTree balanced_bst(const KeyedPath& instance) {
  const std::size_t n = instance.key.size();
  std::vector<NodeId> by_key(n + 1, kNoNode);
  for (std::size_t v = 0; v < n; ++v) by_key[instance.key[v]] = static_cast<NodeId>(v);

  HostTree host(n);
  struct Range {
    std::int64_t lo, hi;
    NodeId parent;
  };
  std::vector<Range> stack{{1, static_cast<std::int64_t>(n), kNoNode}};
  while (!stack.empty()) {
    auto [lo, hi, parent] = stack.back();
    stack.pop_back();
    if (lo > hi) continue;
    const std::int64_t mid = lo + (hi - lo) / 2;
    const NodeId node = by_key[mid];
    if (parent == kNoNode) host.set_root(node);
    else host.link(parent, node);
    // Right pushed first so the left child is linked first.
    stack.push_back({mid + 1, hi, node});
    stack.push_back({lo, mid - 1, node});
  }
  return host;
}

BstRange bst_exhaustive(const KeyedPath& instance) {
  const std::size_t n = instance.key.size();
  if (n > 12) throw std::invalid_argument("exhaustive BST search needs n <= 12");

  // shapes[k]: every BST over in-order positions 0..k-1 as a parent array.
  std::vector<std::vector<std::vector<std::int8_t>>> shapes(n + 1);
  shapes[0].push_back({});
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < k; ++r) {
      for (const auto& left : shapes[r]) {
        for (const auto& right : shapes[k - 1 - r]) {
          std::vector<std::int8_t> p(k);
          const auto root = static_cast<std::int8_t>(r);
          for (std::size_t i = 0; i < r; ++i) p[i] = left[i] < 0 ? root : left[i];
          p[r] = -1;
          for (std::size_t i = 0; i < right.size(); ++i) {
            p[r + 1 + i] = right[i] < 0
                               ? root
                               : static_cast<std::int8_t>(right[i] + r + 1);
          }
          shapes[k].push_back(std::move(p));
        }
      }
    }
  }

  // In-order position of a vertex is key - 1.
  BstRange range;
  range.min = std::numeric_limits<Cost>::max();
  std::vector<int> depth(n);
  for (const auto& p : shapes[n]) {
    for (std::size_t i = 0; i < n; ++i) {
      int d = 0;
      for (int q = p[i]; q >= 0; q = p[q]) ++d;
      depth[i] = d;
    }
    Cost total = 0;
    for (std::size_t v = 0; v + 1 < n; ++v) {
      int a = static_cast<int>(instance.key[v] - 1);
      int b = static_cast<int>(instance.key[v + 1] - 1);
      int da = depth[a], db = depth[b];
      for (; da > db; --da, ++total) a = p[a];
      for (; db > da; --db, ++total) b = p[b];
      while (a != b) {
        a = p[a];
        b = p[b];
        total += 2;
      }
    }
    range.min = std::min(range.min, total);
    range.max = std::max(range.max, total);
    ++range.trees;
  }
  return range;
}

BstDemo bst_demo(std::size_t n) {
  if (n < 4 || !std::has_single_bit(n)) {
    throw std::invalid_argument("bst demo needs n = 2^k with k >= 2");
  }
  const KeyedPath instance = bst_adversarial(n);
  const DemandTree demand = root_at(instance.path, 0);

  BstDemo demo;
  demo.n = n;
  demo.balanced_cost = evaluate(demand, balanced_bst(instance)).total;
  HostTree as_path(n);
  for (std::size_t v = 1; v < n; ++v) {
    as_path.link(static_cast<NodeId>(v - 1), static_cast<NodeId>(v));
  }
  demo.path_cost = evaluate(demand, as_path).total;
  demo.ratio = static_cast<double>(demo.balanced_cost) /
               static_cast<double>(demo.path_cost);
  if (n <= 12) demo.exhaustive = bst_exhaustive(instance);
  return demo;
}

}  // namespace tbt
