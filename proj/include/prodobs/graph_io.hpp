#pragma once

#include "prodobs/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace prodobs {

// Canonical JSON: {"nodes": ["1", "2"], "edges": [["1", "2"]]}.
DiGraph graph_from_json(const nlohmann::json& doc);
DiGraph parse_graph_json(std::string_view text);
nlohmann::json graph_to_json(const DiGraph& g);

// Edge-list text: one "from to" pair per line, '#' starts a comment, a line
// holding a single token declares an isolated node. Nodes are numbered in
// order of first appearance.
DiGraph parse_edge_list(std::string_view text);
std::string graph_to_edge_list(const DiGraph& g);

// Picks JSON when the first non-blank character is '{', edge-list otherwise.
// Throws ParseError (with line/column) on malformed input, including an empty
// node set.
DiGraph parse_graph(std::string_view text);
DiGraph read_graph_file(const std::filesystem::path& path);

struct DotStyle {
    std::string graph_name = "G";
    // Extra per-node attributes, e.g. {"factor1", "2"}.
    std::vector<std::map<std::string, std::string>> node_attributes;
    std::vector<bool> highlighted;
    std::string highlight_color = "lightblue";
};

std::string graph_to_dot(const DiGraph& g, const DotStyle& style = {});

} // namespace prodobs
