#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace prodobs::testing {

std::vector<std::vector<bool>> transitive_closure(const DiGraph& g)
{
    const auto n = g.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        reach[i][i] = true;
    for (const auto& e : g.edges())
        reach[e.from][e.to] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    return reach;
}

std::vector<NodeIndex> scc_representatives(const DiGraph& g)
{
    auto reach = transitive_closure(g);
    std::vector<NodeIndex> rep(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        rep[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            if (reach[i][j] && reach[j][i]) {
                rep[i] = j;
                break;
            }
        }
    }
    return rep;
}

std::vector<std::set<NodeIndex>> sink_classes(const DiGraph& g)
{
    auto rep = scc_representatives(g);
    std::vector<std::set<NodeIndex>> classes;
    for (std::size_t r = 0; r < g.size(); ++r) {
        if (rep[r] != r)
            continue;
        std::set<NodeIndex> members;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (rep[v] == r)
                members.insert(v);
        bool leaves = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
            return members.count(e.from) && !members.count(e.to);
        });
        if (!leaves)
            classes.push_back(std::move(members));
    }
    return classes;
}

std::size_t brute_force_s_rank(const DiGraph& g)
{
    const auto n = g.size();
    std::vector<std::vector<NodeIndex>> out(n);
    for (const auto& e : g.edges())
        out[e.from].push_back(e.to);
    std::vector<bool> used(n, false);
    std::size_t best = 0;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t v, std::size_t size) {
        if (size + (n - v) <= best)
            return;
        if (v == n) {
            best = std::max(best, size);
            return;
        }
        for (auto w : out[v]) {
            if (!used[w]) {
                used[w] = true;
                go(v + 1, size + 1);
                used[w] = false;
            }
        }
        go(v + 1, size);
    };
    go(0, 0);
    return best;
}

bool has_contraction_by_enumeration(const DiGraph& g)
{
    const auto n = g.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::size_t neighbours = 0;
        for (const auto& e : g.edges())
            if (mask >> e.from & 1)
                neighbours |= std::size_t{1} << e.to;
        if (std::popcount(neighbours) < std::popcount(mask))
            return true;
    }
    return false;
}

bool brute_force_spanning_cover(const DiGraph& g, const std::vector<NodeIndex>& observers)
{
    const auto n = g.size();
    std::vector<std::vector<NodeIndex>> out(n);
    for (const auto& e : g.edges())
        out[e.from].push_back(e.to);
    std::vector<bool> is_observer(n, false);
    for (auto v : observers)
        is_observer[v] = true;

    std::vector<bool> entered(n, false);
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == n)
            return true;
        if (is_observer[v] && go(v + 1))
            return true;  // path ends here
        for (auto w : out[v]) {
            if (entered[w])
                continue;
            entered[w] = true;
            bool ok = go(v + 1);
            entered[w] = false;
            if (ok)
                return true;
        }
        return false;
    };
    return go(0);
}

std::set<Edge> product_edges_by_definition(const DiGraph& g1, const DiGraph& g2)
{
    std::set<Edge> edges;
    const auto n1 = g1.size(), n2 = g2.size();
    auto linked = [](const DiGraph& g, NodeIndex u, NodeIndex v) {
        return std::find(g.edges().begin(), g.edges().end(), Edge{u, v}) != g.edges().end();
    };
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t a2 = 0; a2 < n1; ++a2)
                for (std::size_t b2 = 0; b2 < n2; ++b2)
                    if ((a == a2 && linked(g2, b, b2)) || (b == b2 && linked(g1, a, a2)))
                        edges.insert({a * n2 + b, a2 * n2 + b2});
    return edges;
}

bool all_reach_observers(const DiGraph& g, const std::vector<NodeIndex>& observers)
{
    auto reach = transitive_closure(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
        bool ok = std::any_of(observers.begin(), observers.end(), [&](NodeIndex o) { return reach[v][o]; });
        if (!ok)
            return false;
    }
    return true;
}

} // namespace prodobs::testing
