#include "prodobs/matching.hpp"

#include "prodobs/bipartite.hpp"
#include "prodobs/error.hpp"

#include <algorithm>

namespace prodobs {

namespace {

std::vector<std::vector<std::size_t>> start_end_adjacency(const DiGraph& g)
{
    std::vector<std::vector<std::size_t>> adj(g.size());
    for (NodeIndex v = 0; v < g.size(); ++v) {
        auto succ = g.successors(v);
        adj[v].assign(succ.begin(), succ.end());
    }
    return adj;
}

MaximumMatching from_bipartite(const DiGraph& g, const BipartiteMatching& b)
{
    MaximumMatching m;
    m.successor.assign(g.size(), std::nullopt);
    for (NodeIndex v = 0; v < g.size(); ++v) {
        if (b.left_mate[v] != kUnmatched) {
            m.matched_links.push_back({v, b.left_mate[v]});
            m.matched_nodes.push_back(v);
            m.successor[v] = b.left_mate[v];
        } else {
            m.unmatched_nodes.push_back(v);
        }
    }
    m.s_rank = m.matched_links.size();
    return m;
}

} // namespace

std::vector<NodeIndex> out_neighborhood(const DiGraph& g, const std::vector<NodeIndex>& nodes)
{
    std::vector<bool> hit(g.size(), false);
    for (auto v : nodes)
        for (auto w : g.successors(v))
            hit[w] = true;
    std::vector<NodeIndex> result;
    for (NodeIndex v = 0; v < g.size(); ++v)
        if (hit[v])
            result.push_back(v);
    return result;
}

MaximumMatching maximum_matching(const DiGraph& g)
{
    return from_bipartite(g, hopcroft_karp(start_end_adjacency(g), g.size()));
}

bool has_spanning_cycle_family(const DiGraph& g)
{
    return maximum_matching(g).s_rank == g.size();
}

std::optional<std::vector<std::vector<NodeIndex>>> extract_cycle_family(const DiGraph& g,
                                                                        const MaximumMatching& m)
{
    if (m.s_rank != g.size())
        return std::nullopt;
    if (m.successor.size() != g.size())
        throw Error(ErrorCode::NotAPermutation, "matching does not belong to this graph");

    std::vector<bool> is_target(g.size(), false);
    for (NodeIndex v = 0; v < g.size(); ++v) {
        const auto& next = m.successor[v];
        if (!next || *next >= g.size() || is_target[*next] || !g.has_edge(v, *next))
            throw Error(ErrorCode::NotAPermutation,
                        "matched links do not form a permutation at node '" + g.label(v) + "'");
        is_target[*next] = true;
    }

    std::vector<std::vector<NodeIndex>> cycles;
    std::vector<bool> placed(g.size(), false);
    for (NodeIndex start = 0; start < g.size(); ++start) {
        if (placed[start])
            continue;
        std::vector<NodeIndex> cycle;
        for (auto v = start; !placed[v]; v = *m.successor[v]) {
            placed[v] = true;
            cycle.push_back(v);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::optional<Contraction> find_contraction(const DiGraph& g)
{
    auto adj = start_end_adjacency(g);
    auto b = hopcroft_karp(adj, g.size());
    if (b.size == g.size())
        return std::nullopt;

    std::vector<std::size_t> roots;
    std::vector<NodeIndex> sinks;
    for (NodeIndex v = 0; v < g.size(); ++v) {
        if (b.left_mate[v] != kUnmatched)
            continue;
        if (g.out_degree(v) > 0)
            roots.push_back(v);
        else
            sinks.push_back(v);
    }

    Contraction c;
    if (roots.empty()) {
        c.kappa = std::move(sinks);
        return c;
    }
    auto reach = alternating_reach(adj, b, roots);
    for (NodeIndex v = 0; v < g.size(); ++v)
        if (reach.left[v])
            c.kappa.push_back(v);
    c.neighborhood = out_neighborhood(g, c.kappa);
    return c;
}

} // namespace prodobs
