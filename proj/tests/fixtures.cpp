#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace prodobs::testing {

namespace {

std::vector<std::string> numbered(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

DiGraph from_edges(std::size_t n, std::set<Edge> edges)
{
    return DiGraph(numbered(n), std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace

DiGraph example_g1()
{
    return build_graph({"1", "2", "3"}, {{"1", "2"}, {"3", "2"}});
}

DiGraph example_g2()
{
    return build_graph({"1", "2", "3", "4", "5", "6"},
                       {{"1", "1"}, {"2", "2"}, {"5", "5"}, {"6", "6"}, {"3", "4"}, {"4", "3"},
                        {"2", "1"}, {"2", "3"}, {"5", "4"}, {"5", "6"}});
}

DiGraph path_factor()
{
    return build_graph({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
}

DiGraph cycle_factor()
{
    return directed_cycle(3);
}

DiGraph mixed_parents_a()
{
    // 1 -> 2 (parent node), 1 -> 3, 3 <-> 4 (parent SCC)
    return build_graph({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"3", "4"}, {"4", "3"}});
}

DiGraph mixed_parents_b()
{
    // 1 -> 2 (parent node), 1 -> 3, 3 has a self-loop (parent SCC)
    return build_graph({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"3", "3"}});
}

DiGraph single_node()
{
    return build_graph({"a"}, {});
}

DiGraph self_loop_node()
{
    return build_graph({"a"}, {{"a", "a"}});
}

DiGraph directed_cycle(std::size_t n)
{
    std::set<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.insert({i, (i + 1) % n});
    return from_edges(n, edges);
}

DiGraph chain(std::size_t n)
{
    std::set<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.insert({i, i + 1});
    return from_edges(n, edges);
}

DiGraph star_in(std::size_t leaves)
{
    std::vector<std::string> labels{"hub"};
    std::vector<LabelPair> edges;
    for (std::size_t i = 1; i <= leaves; ++i) {
        labels.push_back("leaf" + std::to_string(i));
        edges.emplace_back(labels.back(), "hub");
    }
    return build_graph(labels, edges);
}

std::vector<NamedGraph> fixture_set()
{
    std::vector<NamedGraph> set{
        {"example_g1", example_g1()},
        {"example_g2", example_g2()},
        {"path_factor", path_factor()},
        {"cycle_factor", cycle_factor()},
        {"mixed_parents_a", mixed_parents_a()},
        {"mixed_parents_b", mixed_parents_b()},
        {"single_node", single_node()},
        {"self_loop_node", self_loop_node()},
        {"cycle4", directed_cycle(4)},
        {"chain5", chain(5)},
        {"star4", star_in(4)},
        {"two_cycles_bridge",
         build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"}})},
        {"out_star", build_graph({"h", "x", "y", "z"}, {{"h", "x"}, {"h", "y"}, {"h", "z"}})},
    };
    Rng rng(20240611);
    for (std::size_t i = 0; i < 12; ++i) {
        auto n = 2 + i % 6;
        set.push_back({"random" + std::to_string(i), random_connected_digraph(rng, n, 0.3)});
    }
    return set;
}

DiGraph random_digraph(Rng& rng, std::size_t n, double edge_probability)
{
    std::bernoulli_distribution coin(edge_probability);
    std::set<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng))
                edges.insert({u, v});
    return from_edges(n, edges);
}

DiGraph random_connected_digraph(Rng& rng, std::size_t n, double edge_probability)
{
    // Random spanning tree with random orientations, then extra edges.
    std::set<Edge> edges;
    std::bernoulli_distribution coin(edge_probability), flip(0.5);
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        auto u = pick(rng);
        edges.insert(flip(rng) ? Edge{u, v} : Edge{v, u});
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (coin(rng))
                edges.insert({u, v});
    return from_edges(n, edges);
}

DiGraph random_with_cycle_cover(Rng& rng, std::size_t n, double edge_probability)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto base = random_connected_digraph(rng, n, edge_probability);
    std::set<Edge> edges(base.edges().begin(), base.edges().end());
    for (std::size_t v = 0; v < n; ++v)
        edges.insert({v, perm[v]});
    return from_edges(n, edges);
}

std::vector<NodeIndex> random_subset(Rng& rng, std::size_t n, double probability)
{
    std::bernoulli_distribution coin(probability);
    std::vector<NodeIndex> out;
    for (NodeIndex v = 0; v < n; ++v)
        if (coin(rng))
            out.push_back(v);
    return out;
}

} // namespace prodobs::testing
