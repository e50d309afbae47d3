#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tbt/tree_model.hpp"

namespace tbt {

// Level-order complete binary tree with `leaf_count` leaves and
// 2*leaf_count - 1 slots numbered from 1: slot k has children 2k and 2k+1,
// slots below leaf_count are internal and the rest are leaves. Every internal
// slot has two children.
class BracketShape {
 public:
  explicit BracketShape(std::size_t leaf_count);

  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t slot_count() const noexcept { return 2 * leaves_ - 1; }
  bool is_leaf(std::size_t slot) const noexcept { return slot >= leaves_; }
  static std::size_t depth(std::size_t slot) noexcept;
  // Slot of the i-th leaf from the left.
  std::size_t leaf_slot(std::size_t i) const noexcept;

 private:
  std::size_t leaves_;
};

// A bracket with its players seated: occupant[slot] holds the player of each
// leaf slot and kNoNode for internal slots (index 0 is unused).
struct Bracket {
  BracketShape shape;
  std::vector<NodeId> occupant;
};

// Seats players on the leaves left to right. Throws std::invalid_argument for
// an empty list.
Bracket build_bracket(std::span<const NodeId> players);

// Phase one. Every vertex v with children gets a bracket whose internal slots
// are fresh Steiner nodes owned by v, and v is linked above the bracket root.
// Steiner ids are allocated from n upward in vertex order.
HostTree run_bracket_builder(const DemandTree& demand);

}  // namespace tbt
