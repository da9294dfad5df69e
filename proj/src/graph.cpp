#include "prodobs/graph.hpp"

#include "prodobs/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace prodobs {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::UnknownObserver: return "UnknownObserver";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::NotNumericallyObservable: return "NotNumericallyObservable";
    case ErrorCode::DivergedEstimate: return "DivergedEstimate";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

std::size_t PatternMatrix::count() const
{
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), char{1}));
}

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool forward,
               std::vector<std::size_t>& offsets, std::vector<NodeIndex>& targets)
{
    offsets.assign(n + 1, 0);
    for (const auto& e : edges)
        ++offsets[(forward ? e.from : e.to) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    targets.resize(edges.size());
    auto cursor = offsets;
    // edges are sorted by (from, to), so forward lists come out ascending;
    // reverse lists need an explicit sort.
    for (const auto& e : edges)
        targets[cursor[forward ? e.from : e.to]++] = forward ? e.to : e.from;
    if (!forward) {
        for (std::size_t v = 0; v < n; ++v)
            std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
                      targets.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
    }
}

} // namespace

DiGraph::DiGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges))
{
    const auto n = labels_.size();
    index_of_.reserve(n);
    for (NodeIndex v = 0; v < n; ++v) {
        if (labels_[v].empty())
            throw Error(ErrorCode::InvalidLabel, "node " + std::to_string(v) + " has an empty label");
        if (!index_of_.emplace(labels_[v], v).second)
            throw Error(ErrorCode::DuplicateLabel, "duplicate node label '" + labels_[v] + "'");
    }
    for (const auto& e : edges_) {
        if (e.from >= n || e.to >= n)
            throw Error(ErrorCode::UnknownEndpoint, "edge (" + std::to_string(e.from) + ", " +
                                                        std::to_string(e.to) + ") references a missing node");
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorCode::DuplicateEdge,
                    "duplicate edge '" + labels_[dup->from] + "' -> '" + labels_[dup->to] + "'");

    build_csr(n, edges_, true, out_offsets_, out_targets_);
    build_csr(n, edges_, false, in_offsets_, in_sources_);
}

std::optional<NodeIndex> DiGraph::find(std::string_view label) const
{
    auto it = index_of_.find(std::string(label));
    if (it == index_of_.end())
        return std::nullopt;
    return it->second;
}

std::span<const NodeIndex> DiGraph::successors(NodeIndex v) const
{
    return {out_targets_.data() + out_offsets_.at(v), out_offsets_.at(v + 1) - out_offsets_[v]};
}

std::span<const NodeIndex> DiGraph::predecessors(NodeIndex v) const
{
    return {in_sources_.data() + in_offsets_.at(v), in_offsets_.at(v + 1) - in_offsets_[v]};
}

bool DiGraph::has_edge(NodeIndex from, NodeIndex to) const
{
    auto succ = successors(from);
    return std::binary_search(succ.begin(), succ.end(), to);
}

DiGraph build_graph(std::vector<std::string> node_labels, const std::vector<LabelPair>& edges)
{
    std::unordered_map<std::string, NodeIndex> index;
    for (NodeIndex v = 0; v < node_labels.size(); ++v) {
        if (!index.emplace(node_labels[v], v).second)
            throw Error(ErrorCode::DuplicateLabel, "duplicate node label '" + node_labels[v] + "'");
    }
    std::vector<Edge> resolved;
    resolved.reserve(edges.size());
    for (const auto& [from, to] : edges) {
        auto f = index.find(from);
        auto t = index.find(to);
        if (f == index.end() || t == index.end()) {
            const auto& missing = f == index.end() ? from : to;
            throw Error(ErrorCode::UnknownEndpoint,
                        "edge '" + from + "' -> '" + to + "' uses unknown node '" + missing + "'");
        }
        resolved.push_back({f->second, t->second});
    }
    return DiGraph(std::move(node_labels), std::move(resolved));
}

std::vector<std::vector<NodeIndex>> weak_components(const DiGraph& g)
{
    const auto n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<NodeIndex>> components;
    for (NodeIndex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<NodeIndex> members;
        std::queue<NodeIndex> frontier;
        frontier.push(root);
        seen[root] = true;
        while (!frontier.empty()) {
            auto v = frontier.front();
            frontier.pop();
            members.push_back(v);
            auto visit = [&](NodeIndex w) {
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push(w);
                }
            };
            for (auto w : g.successors(v))
                visit(w);
            for (auto w : g.predecessors(v))
                visit(w);
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    return components;
}

bool is_connected(const DiGraph& g)
{
    return weak_components(g).size() <= 1;
}

PatternMatrix adjacency_pattern(const DiGraph& g)
{
    PatternMatrix pattern(g.size());
    for (const auto& e : g.edges())
        pattern.set(e.to, e.from);
    return pattern;
}

DiGraph reversed(const DiGraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges())
        edges.push_back({e.to, e.from});
    return DiGraph(g.labels(), std::move(edges));
}

} // namespace prodobs
