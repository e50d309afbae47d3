#include "tbt/bracket_builder.hpp"

#include <bit>
#include <stdexcept>

namespace tbt {

BracketShape::BracketShape(std::size_t leaf_count) : leaves_(leaf_count) {
  if (leaf_count == 0) throw std::invalid_argument("bracket needs a player");
}

std::size_t BracketShape::depth(std::size_t slot) noexcept {
  return static_cast<std::size_t>(std::bit_width(slot)) - 1;
}

std::size_t BracketShape::leaf_slot(std::size_t i) const noexcept {
  // The deepest level holds leaves bottom_first..2l-1 at its left end; the
  // remaining leaves close the level above on the right.
  const std::size_t bottom_first = std::bit_ceil(leaves_);
  const std::size_t bottom = 2 * leaves_ - bottom_first;
  return i < bottom ? bottom_first + i : leaves_ + (i - bottom);
}

Bracket build_bracket(std::span<const NodeId> players) {
  Bracket b{BracketShape(players.size()), {}};
  b.occupant.assign(b.shape.slot_count() + 1, kNoNode);
  for (std::size_t i = 0; i < players.size(); ++i) {
    b.occupant[b.shape.leaf_slot(i)] = players[i];
  }
  return b;
}

HostTree run_bracket_builder(const DemandTree& demand) {
  const std::size_t n = demand.size();
  HostTree host(n);
  if (n == 0) return host;
  host.set_root(demand.root());
  host.reserve(n + demand.leaf_count());

  std::vector<NodeId> slot_node;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<NodeId>(i);
    const auto kids = demand.children(v);
    if (kids.empty()) continue;
    if (kids.size() == 1) {
      host.link(v, kids[0]);
      continue;
    }
    const Bracket b = build_bracket(kids);
    const std::size_t leaves = b.shape.leaf_count();
    slot_node.assign(b.shape.slot_count() + 1, kNoNode);
    for (std::size_t k = 1; k < leaves; ++k) slot_node[k] = host.add_steiner(v);
    for (std::size_t k = leaves; k <= b.shape.slot_count(); ++k) {
      slot_node[k] = b.occupant[k];
    }
    host.link(v, slot_node[1]);
    for (std::size_t k = 1; k < leaves; ++k) {
      host.link(slot_node[k], slot_node[2 * k]);
      host.link(slot_node[k], slot_node[2 * k + 1]);
    }
  }
  return host;
}

}  // namespace tbt
