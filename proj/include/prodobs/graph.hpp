#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace prodobs {

using NodeIndex = std::size_t;

struct NodeId {
    NodeIndex index = 0;
    std::string label;

    bool operator==(const NodeId&) const = default;
};

// Directed link "from influences to".
struct Edge {
    NodeIndex from = 0;
    NodeIndex to = 0;

    auto operator<=>(const Edge&) const = default;
};

using LabelPair = std::pair<std::string, std::string>;

// Square boolean matrix, row-major. Entry (i, j) is the structural coupling
// of state i to state j.
class PatternMatrix {
public:
    explicit PatternMatrix(std::size_t n = 0) : n_(n), cells_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t row, std::size_t col) const { return cells_[row * n_ + col] != 0; }
    void set(std::size_t row, std::size_t col, bool value = true) { cells_[row * n_ + col] = value; }
    std::size_t count() const;

private:
    std::size_t n_;
    std::vector<char> cells_;
};

// Immutable directed graph with dense 0-based indices and unique labels.
// Self-loops are allowed, parallel edges are not. Edges are kept sorted so
// two graphs built from the same edge set in different orders compare equal.
class DiGraph {
public:
    DiGraph() = default;

    // Index-based constructor. Validates labels and endpoints and throws
    // prodobs::Error (DuplicateLabel, InvalidLabel, UnknownEndpoint,
    // DuplicateEdge) on bad input.
    DiGraph(std::vector<std::string> labels, std::vector<Edge> edges);

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(NodeIndex v) const { return labels_.at(v); }
    NodeId node(NodeIndex v) const { return {v, labels_.at(v)}; }
    std::optional<NodeIndex> find(std::string_view label) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const NodeIndex> successors(NodeIndex v) const;
    std::span<const NodeIndex> predecessors(NodeIndex v) const;
    std::size_t out_degree(NodeIndex v) const { return successors(v).size(); }

    bool has_edge(NodeIndex from, NodeIndex to) const;
    bool has_self_loop(NodeIndex v) const { return has_edge(v, v); }

    bool operator==(const DiGraph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, NodeIndex> index_of_;
    // CSR adjacency in both directions, neighbours ascending.
    std::vector<std::size_t> out_offsets_, in_offsets_;
    std::vector<NodeIndex> out_targets_, in_sources_;
};

// Label-based construction; endpoints must name entries of node_labels.
DiGraph build_graph(std::vector<std::string> node_labels, const std::vector<LabelPair>& edges);

// Weak connectivity: one component of the underlying undirected graph.
bool is_connected(const DiGraph& g);

// Weakly connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<NodeIndex>> weak_components(const DiGraph& g);

// Edge a->b sets entry (b, a): row b's derivative depends on state a, so
// x' = A x carries influence along edge direction.
PatternMatrix adjacency_pattern(const DiGraph& g);

// The same graph with every edge reversed.
DiGraph reversed(const DiGraph& g);

} // namespace prodobs
