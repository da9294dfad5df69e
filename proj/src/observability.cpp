#include "prodobs/observability.hpp"

#include "prodobs/bipartite.hpp"
#include "prodobs/error.hpp"
#include "prodobs/matching.hpp"
#include "prodobs/product.hpp"
#include "prodobs/structure.hpp"

#include <algorithm>
#include <queue>

namespace prodobs {

bool ObserverPlan::parent_scc_only(NodeIndex v) const
{
    auto it = reasons.find(v);
    if (it == reasons.end() || it->second.empty())
        return false;
    return std::all_of(it->second.begin(), it->second.end(),
                       [](const CoverTag& t) { return t.reason == CoverReason::ParentSccCover; });
}

ObserverPlan plan_observers(const DiGraph& g)
{
    ObserverPlan plan;
    if (g.empty())
        return plan;
    // Matching and sink components both decompose over weak components, so a
    // single global pass plans every component independently.
    if (auto parts = weak_components(g); parts.size() > 1)
        plan.warnings.push_back("graph has " + std::to_string(parts.size()) +
                                " weakly connected components; planned each independently");

    auto m = maximum_matching(g);
    auto scc = scc_decompose(g);
    auto parents = classify_parents(g, scc);

    std::vector<bool> observed(g.size(), false);
    for (auto v : m.unmatched_nodes) {
        observed[v] = true;
        plan.reasons[v].push_back({CoverReason::UnmatchedCover, scc.component_of[v]});
    }
    plan.num_unmatched_covered = m.unmatched_nodes.size();

    for (std::size_t i = 0; i < parents.parent_sccs.size(); ++i) {
        const auto& members = parents.parent_sccs[i];
        auto c = parents.parent_scc_components[i];
        auto already = std::find_if(members.begin(), members.end(), [&](NodeIndex v) { return observed[v]; });
        auto rep = already != members.end() ? *already : members.front();
        observed[rep] = true;
        plan.reasons[rep].push_back({CoverReason::ParentSccCover, c});
        ++plan.num_parent_sccs_covered;
    }

    for (NodeIndex v = 0; v < g.size(); ++v)
        if (observed[v])
            plan.observers.push_back(v);
    return plan;
}

std::vector<NodeIndex> resolve_observers(const DiGraph& g, const std::vector<std::string>& labels)
{
    std::vector<NodeIndex> result;
    result.reserve(labels.size());
    for (const auto& label : labels) {
        auto v = g.find(label);
        if (!v)
            throw Error(ErrorCode::UnknownObserver, "observer '" + label + "' is not a node of the graph");
        result.push_back(*v);
    }
    return result;
}

ObservabilityVerdict check_observable(const DiGraph& g, const std::vector<NodeIndex>& observers)
{
    std::vector<NodeIndex> obs = observers;
    for (auto v : obs)
        if (v >= g.size())
            throw Error(ErrorCode::UnknownObserver, "observer index " + std::to_string(v) + " is out of range");
    std::sort(obs.begin(), obs.end());
    obs.erase(std::unique(obs.begin(), obs.end()), obs.end());

    const auto n = g.size();

    // Output connectivity: every node reaches an observer.
    std::vector<bool> reached(n, false);
    std::queue<NodeIndex> q;
    for (auto v : obs) {
        reached[v] = true;
        q.push(v);
    }
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : g.predecessors(v)) {
            if (!reached[w]) {
                reached[w] = true;
                q.push(w);
            }
        }
    }
    auto unreached = static_cast<std::size_t>(std::count(reached.begin(), reached.end(), false));
    if (unreached > 0) {
        // The unreached set is closed under successors, so it contains a
        // whole sink component; report a node from the first such one.
        auto scc = scc_decompose(g);
        std::optional<NodeIndex> witness;
        for (auto c : scc.sinks()) {
            auto v = scc.components[c].front();
            if (!reached[v] && (!witness || v < *witness))
                witness = v;
        }
        return {OutputConnectivity{witness.value_or(0), unreached}};
    }

    if (auto uncovered = spanning_deficiency(g, obs))
        return {SpanningDeficiency{uncovered}};
    return {};
}

std::size_t spanning_deficiency(const DiGraph& g, const std::vector<NodeIndex>& observers)
{
    // Each node either continues along an edge or ends its path at its own
    // observer sink, with no end used twice.
    std::vector<NodeIndex> obs = observers;
    std::sort(obs.begin(), obs.end());
    obs.erase(std::unique(obs.begin(), obs.end()), obs.end());
    const auto n = g.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (NodeIndex v = 0; v < n; ++v) {
        auto succ = g.successors(v);
        adj[v].assign(succ.begin(), succ.end());
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
        if (obs[i] >= n)
            throw Error(ErrorCode::UnknownObserver, "observer index " + std::to_string(obs[i]) + " is out of range");
        adj[obs[i]].push_back(n + i);
    }
    return n - hopcroft_karp(adj, n + obs.size()).size;
}

ObservabilityVerdict check_observable(const DiGraph& g, const std::vector<std::string>& observer_labels)
{
    return check_observable(g, resolve_observers(g, observer_labels));
}

GraphSummary summarize(const DiGraph& g)
{
    GraphSummary s;
    s.n = g.size();
    s.edges = g.edge_count();
    s.connected = is_connected(g);
    auto m = maximum_matching(g);
    s.s_rank = m.s_rank;
    s.spanning_cycle_family = m.s_rank == g.size();
    s.unmatched = m.unmatched_nodes.size();
    auto parents = classify_parents(g, scc_decompose(g));
    s.parent_sccs = parents.parent_sccs.size();
    s.parent_nodes = parents.parent_nodes.size();
    s.planned_observers = plan_observers(g).observers.size();
    return s;
}

ProductRecoveryReport verify_product_recovery(const DiGraph& g1, const DiGraph& g2)
{
    ProductRecoveryReport r;
    auto p = cartesian_product(g1, g2);
    r.left = summarize(g1);
    r.right = summarize(g2);
    r.product = summarize(p.graph);
    for (auto v : maximum_matching(p.graph).unmatched_nodes)
        r.product_unmatched.push_back(p.graph.label(v));

    r.parent_formula_applicable = r.left.connected && r.right.connected;
    r.parent_formula_holds = r.product.parents() == r.left.parents() * r.right.parents();
    if (!r.parent_formula_applicable)
        r.warnings.push_back("a factor is weakly disconnected; the parent-count product formula is only "
                             "established for connected factors");

    r.unmatched_recovery_applicable = r.left.spanning_cycle_family || r.right.spanning_cycle_family;
    r.unmatched_recovery_holds = !r.unmatched_recovery_applicable || r.product.unmatched == 0;
    r.recovered = (r.left.unmatched > 0 || r.right.unmatched > 0) && r.product.unmatched == 0;
    return r;
}

} // namespace prodobs
