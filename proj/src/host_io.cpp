#include "tbt/host_io.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace tbt {

namespace {

bool parse_index(std::string_view token, std::size_t& value) {
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

struct Entry {
  std::string node;
  std::string parent;  // empty for the root
};

class NameResolver {
 public:
  explicit NameResolver(std::span<const std::string> labels) {
    for (std::size_t v = 0; v < labels.size(); ++v) {
      by_label_.emplace(labels[v], static_cast<NodeId>(v));
    }
  }

  // Returns the id and whether the token names a Steiner node.
  std::pair<std::size_t, bool> resolve(const std::string& token) const {
    if (!by_label_.empty()) {
      if (auto it = by_label_.find(token); it != by_label_.end()) {
        return {static_cast<std::size_t>(it->second), false};
      }
    }
    std::size_t value = 0;
    if (token.size() > 1 && token[0] == 's' &&
        parse_index(std::string_view(token).substr(1), value)) {
      return {value, true};
    }
    if (by_label_.empty() && parse_index(token, value)) return {value, false};
    throw std::invalid_argument("unknown node '" + token + "'");
  }

 private:
  std::unordered_map<std::string, NodeId> by_label_;
};

HostTree build_host(const std::vector<Entry>& entries,
                    std::span<const std::string> labels) {
  NameResolver names(labels);
  std::vector<std::pair<std::size_t, bool>> ids;
  ids.reserve(entries.size());
  std::size_t vertex_count = 0;
  std::size_t max_id = 0;
  for (const auto& e : entries) {
    ids.push_back(names.resolve(e.node));
    if (!ids.back().second) ++vertex_count;
    max_id = std::max(max_id, ids.back().first);
  }
  if (vertex_count == 0) throw std::invalid_argument("host tree has no vertices");
  if (!labels.empty() && vertex_count != labels.size()) {
    throw std::invalid_argument("host tree does not cover every vertex");
  }

  HostTree host(vertex_count);
  std::vector<std::uint8_t> seen(std::max(max_id + 1, vertex_count), 0);
  for (auto [id, steiner] : ids) {
    if (steiner ? id < vertex_count : id >= vertex_count) {
      throw std::invalid_argument("node id " + std::to_string(id) +
                                  " out of range");
    }
    if (seen[id]++) {
      throw std::invalid_argument("node id " + std::to_string(id) +
                                  " listed twice");
    }
  }
  while (host.slot_count() < seen.size()) host.add_steiner(kNoNode);

  NodeId root = kNoNode;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto child = static_cast<NodeId>(ids[i].first);
    if (entries[i].parent.empty()) {
      if (root != kNoNode) throw std::invalid_argument("more than one root");
      root = child;
      continue;
    }
    auto [pid, psteiner] = names.resolve(entries[i].parent);
    if (pid >= seen.size() || !seen[pid] ||
        (psteiner != (pid >= vertex_count))) {
      throw std::invalid_argument("unknown parent '" + entries[i].parent + "'");
    }
    try {
      host.link(static_cast<NodeId>(pid), child);
    } catch (const std::logic_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  if (root == kNoNode) throw std::invalid_argument("no root");
  host.set_root(root);
  for (std::size_t id = vertex_count; id < seen.size(); ++id) {
    if (!seen[id]) host.retire(static_cast<NodeId>(id));
  }
  try {
    host.validate();
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(e.what());
  }

  // Steiner owner = nearest vertex ancestor.
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId c : host.children(v)) {
      if (host.is_steiner(c)) {
        host.set_owner(c, host.is_steiner(v) ? host.owner(v) : v);
      }
      stack.push_back(c);
    }
  }
  return host;
}

}  // namespace

std::string node_name(const HostTree& host, NodeId id,
                      std::span<const std::string> labels) {
  if (host.is_steiner(id)) return "s" + std::to_string(id);
  if (!labels.empty()) return labels[id];
  return std::to_string(id);
}

std::string to_parent_array(const HostTree& host,
                            std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < host.slot_count(); ++i) {
    auto id = static_cast<NodeId>(i);
    if (!host.contains(id)) continue;
    out += node_name(host, id, labels);
    out += ':';
    NodeId p = host.parent(id);
    out += p == kNoNode ? std::string("-") : node_name(host, p, labels);
    out += '\n';
  }
  return out;
}

HostTree parse_parent_array(std::string_view text,
                            std::span<const std::string> labels) {
  std::vector<Entry> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw std::invalid_argument("expected 'node:parent', got '" +
                                  std::string(line) + "'");
    }
    std::string parent(line.substr(colon + 1));
    if (parent == "-") parent.clear();
    else if (parent.empty()) {
      throw std::invalid_argument("missing parent in '" + std::string(line) + "'");
    }
    entries.push_back({std::string(line.substr(0, colon)), std::move(parent)});
  }
  return build_host(entries, labels);
}

nlohmann::json host_to_json(const HostTree& host,
                            std::span<const std::string> labels) {
  nlohmann::json nodes = nlohmann::json::array();
  nlohmann::json parent = nlohmann::json::array();
  nlohmann::json steiner = nlohmann::json::array();
  nlohmann::json label_list = nlohmann::json::array();
  for (std::size_t i = 0; i < host.slot_count(); ++i) {
    auto id = static_cast<NodeId>(i);
    if (!host.contains(id)) continue;
    nodes.push_back(node_name(host, id));
    NodeId p = host.parent(id);
    if (p == kNoNode) parent.push_back(nullptr);
    else parent.push_back(node_name(host, p));
    steiner.push_back(host.is_steiner(id));
    if (!labels.empty()) {
      if (host.is_steiner(id)) label_list.push_back(nullptr);
      else label_list.push_back(labels[id]);
    }
  }
  nlohmann::json doc = {{"nodes", std::move(nodes)},
                        {"parent", std::move(parent)},
                        {"steiner", std::move(steiner)},
                        {"root", node_name(host, host.root())}};
  if (!labels.empty()) doc["labels"] = std::move(label_list);
  return doc;
}

HostTree host_from_json(const nlohmann::json& doc) {
  try {
    const auto& nodes = doc.at("nodes");
    const auto& parent = doc.at("parent");
    const auto& steiner = doc.at("steiner");
    if (nodes.size() != parent.size() || nodes.size() != steiner.size()) {
      throw std::invalid_argument("nodes/parent/steiner lengths differ");
    }
    std::vector<Entry> entries;
    entries.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      std::string name = nodes[i].get<std::string>();
      bool flagged = steiner[i].get<bool>();
      if (flagged != (!name.empty() && name[0] == 's')) {
        throw std::invalid_argument("steiner flag disagrees with id " + name);
      }
      entries.push_back({std::move(name), parent[i].is_null()
                                              ? std::string()
                                              : parent[i].get<std::string>()});
    }
    HostTree host = build_host(entries, {});
    if (node_name(host, host.root()) != doc.at("root").get<std::string>()) {
      throw std::invalid_argument("root field disagrees with parent list");
    }
    return host;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed host JSON: ") + e.what());
  }
}

}  // namespace tbt
