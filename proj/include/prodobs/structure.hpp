#pragma once

#include "prodobs/graph.hpp"

#include <vector>

namespace prodobs {

// Strongly connected components and their condensation.
//
// Components are numbered in a topological order of the condensation (every
// condensation edge i -> j has i < j, so sinks come last); ties are broken by
// the smallest node index a component contains. Each component's node list
// is ascending.
struct SccDecomposition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<NodeIndex>> components;
    std::vector<Edge> condensation;  // over component indices, sorted, no self-edges

    std::size_t count() const noexcept { return components.size(); }
    std::vector<std::size_t> sinks() const;
};

// A sink of the condensation is a parent SCC when it has two or more nodes or
// is a single node with a self-loop, and a parent node otherwise.
struct ParentClassification {
    std::vector<std::size_t> parent_scc_components;
    std::vector<std::size_t> parent_node_components;
    std::vector<std::vector<NodeIndex>> parent_sccs;
    std::vector<NodeIndex> parent_nodes;

    std::size_t total() const noexcept { return parent_sccs.size() + parent_nodes.size(); }
};

SccDecomposition scc_decompose(const DiGraph& g);
ParentClassification classify_parents(const DiGraph& g, const SccDecomposition& d);
std::size_t count_parents(const DiGraph& g);

} // namespace prodobs
