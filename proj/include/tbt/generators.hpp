#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tbt/cost_eval.hpp"
#include "tbt/tree_model.hpp"

namespace tbt {

enum class TreeKind { kPath, kStar, kCaterpillar, kCompleteBinary, kRandom };

TreeKind parse_tree_kind(std::string_view name);
std::string_view to_string(TreeKind kind);

// Labels are "0".."n-1". Path: 0-1-...-(n-1). Star: centre 0. Caterpillar:
// spine 0..ceil(n/2)-1, leg i hangs from spine vertex (i - spine) mod spine.
// Complete binary: heap layout, parent of i is (i-1)/2. Random: uniform over
// labeled trees via a random Pruefer sequence.
UnrootedTree generate(TreeKind kind, std::size_t n, std::uint64_t seed = 0);

// Path 0-1-...-(n-1) whose vertex i carries key[i]; consecutive keys follow
// 1, n/2+1, 2, n/2+2, ..., n/2, n.
struct KeyedPath {
  UnrootedTree path;
  std::vector<std::int64_t> key;
};

// Throws std::invalid_argument for odd n or n < 4.
KeyedPath bst_adversarial(std::size_t n);

// Midpoint-recursive BST over the path's keys, as a host tree on the path's
// vertices.
HostTree balanced_bst(const KeyedPath& instance);

struct BstRange {
  Cost min = 0;
  Cost max = 0;
  std::uint64_t trees = 0;
};

// Cost of the path under every BST over keys 1..n (Catalan many). n <= 12.
BstRange bst_exhaustive(const KeyedPath& instance);

struct BstDemo {
  std::size_t n = 0;
  Cost balanced_cost = 0;
  Cost path_cost = 0;
  double ratio = 0;  // balanced_cost / path_cost
  std::optional<BstRange> exhaustive;  // n <= 12
};

// Needs n = 2^k with k >= 2.
BstDemo bst_demo(std::size_t n);

}  // namespace tbt
