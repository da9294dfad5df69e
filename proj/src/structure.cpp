#include "prodobs/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace prodobs {

namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Returns a raw component id per node; ids are in reverse
// topological order of the condensation.
std::vector<std::size_t> tarjan(const DiGraph& g, std::size_t& component_count)
{
    const auto n = g.size();
    std::vector<std::size_t> index(n, kUnvisited), lowlink(n, 0), comp(n, kUnvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeIndex> stack;
    std::vector<std::pair<NodeIndex, std::size_t>> call;  // node, next successor position
    std::size_t counter = 0;
    component_count = 0;

    for (NodeIndex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited)
            continue;
        call.emplace_back(root, 0);
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto succ = g.successors(v);
            if (pos < succ.size()) {
                auto w = succ[pos++];
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            auto done = v;
            call.pop_back();
            if (!call.empty())
                lowlink[call.back().first] = std::min(lowlink[call.back().first], lowlink[done]);
            if (lowlink[done] == index[done]) {
                NodeIndex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = component_count;
                } while (w != done);
                ++component_count;
            }
        }
    }
    return comp;
}

} // namespace

std::vector<std::size_t> SccDecomposition::sinks() const
{
    std::vector<bool> has_out(components.size(), false);
    for (const auto& e : condensation)
        has_out[e.from] = true;
    std::vector<std::size_t> result;
    for (std::size_t c = 0; c < components.size(); ++c)
        if (!has_out[c])
            result.push_back(c);
    return result;
}

SccDecomposition scc_decompose(const DiGraph& g)
{
    std::size_t raw_count = 0;
    auto raw = tarjan(g, raw_count);

    std::vector<NodeIndex> smallest(raw_count, kUnvisited);
    for (NodeIndex v = g.size(); v-- > 0;)
        smallest[raw[v]] = v;

    std::vector<Edge> raw_edges;
    for (const auto& e : g.edges())
        if (raw[e.from] != raw[e.to])
            raw_edges.push_back({raw[e.from], raw[e.to]});
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

    // Kahn's algorithm, always releasing the ready component with the
    // smallest member first.
    std::vector<std::size_t> indegree(raw_count, 0);
    std::vector<std::vector<std::size_t>> out(raw_count);
    for (const auto& e : raw_edges) {
        ++indegree[e.to];
        out[e.from].push_back(e.to);
    }
    using Key = std::pair<NodeIndex, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t c = 0; c < raw_count; ++c)
        if (indegree[c] == 0)
            ready.emplace(smallest[c], c);
    std::vector<std::size_t> renumber(raw_count, 0);
    std::size_t next = 0;
    while (!ready.empty()) {
        auto c = ready.top().second;
        ready.pop();
        renumber[c] = next++;
        for (auto d : out[c])
            if (--indegree[d] == 0)
                ready.emplace(smallest[d], d);
    }

    SccDecomposition d;
    d.component_of.resize(g.size());
    d.components.resize(raw_count);
    for (NodeIndex v = 0; v < g.size(); ++v) {
        d.component_of[v] = renumber[raw[v]];
        d.components[d.component_of[v]].push_back(v);
    }
    for (const auto& e : raw_edges)
        d.condensation.push_back({renumber[e.from], renumber[e.to]});
    std::sort(d.condensation.begin(), d.condensation.end());
    return d;
}

ParentClassification classify_parents(const DiGraph& g, const SccDecomposition& d)
{
    ParentClassification result;
    for (auto c : d.sinks()) {
        const auto& members = d.components[c];
        if (members.size() >= 2 || g.has_self_loop(members.front())) {
            result.parent_scc_components.push_back(c);
            result.parent_sccs.push_back(members);
        } else {
            result.parent_node_components.push_back(c);
            result.parent_nodes.push_back(members.front());
        }
    }
    return result;
}

std::size_t count_parents(const DiGraph& g)
{
    return scc_decompose(g).sinks().size();
}

} // namespace prodobs
