#pragma once

#include "prodobs/graph.hpp"

#include <optional>
#include <vector>

namespace prodobs {

// Maximum matching on the start/end bipartite representation of a digraph:
// left copy = start nodes, right copy = end nodes, one bipartite edge per
// directed edge (self-loops included).
struct MaximumMatching {
    std::vector<Edge> matched_links;        // sorted by start node
    std::vector<NodeIndex> matched_nodes;   // start nodes of matched links
    std::vector<NodeIndex> unmatched_nodes; // complement of matched_nodes
    std::size_t s_rank = 0;

    // Successor of v along its matched link, if any.
    std::vector<std::optional<NodeIndex>> successor;
};

// Out-neighbourhood of kappa is strictly smaller than kappa.
struct Contraction {
    std::vector<NodeIndex> kappa;
    std::vector<NodeIndex> neighborhood;
};

// Out-neighbourhood of a node set, ascending.
std::vector<NodeIndex> out_neighborhood(const DiGraph& g, const std::vector<NodeIndex>& nodes);

MaximumMatching maximum_matching(const DiGraph& g);
bool has_spanning_cycle_family(const DiGraph& g);

// When the matching is perfect its links form a permutation start -> end;
// returns its cycles (each starting at its smallest node, ordered by that
// node). Returns nullopt for a deficient matching, throws NotAPermutation if
// the links are inconsistent.
std::optional<std::vector<std::vector<NodeIndex>>> extract_cycle_family(const DiGraph& g,
                                                                        const MaximumMatching& m);

// Rank-deficiency witness from alternating reachability of the canonical
// matching. Unmatched nodes that have outgoing links seed the search, so
// out-degree-zero nodes only appear when they are the sole deficiency (then
// kappa is that set and its neighbourhood is empty).
std::optional<Contraction> find_contraction(const DiGraph& g);

} // namespace prodobs
