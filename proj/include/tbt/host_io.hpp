#pragma once

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tbt/tree_model.hpp"

namespace tbt {

// Vertices print as their dense id (or their label when a label table is
// given); Steiner nodes print as "s<id>".
std::string node_name(const HostTree& host, NodeId id,
                      std::span<const std::string> labels = {});

// One "node:parent" line per live node in id order; the root's parent is "-".
std::string to_parent_array(const HostTree& host,
                            std::span<const std::string> labels = {});

// Inverse of to_parent_array. With a label table, vertex tokens are resolved
// through it; otherwise they must be the dense ids 0..n-1. Steiner ids are
// preserved, gaps become retired slots. Steiner owners are restored as the
// nearest vertex ancestor. Throws std::invalid_argument on malformed input.
HostTree parse_parent_array(std::string_view text,
                            std::span<const std::string> labels = {});

// {"nodes": [...], "parent": [...|null], "steiner": [...], "root": ...};
// "labels" is added for vertices when a label table is given.
nlohmann::json host_to_json(const HostTree& host,
                            std::span<const std::string> labels = {});
HostTree host_from_json(const nlohmann::json& doc);

}  // namespace tbt
