#pragma once

#include "prodobs/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace prodobs::testing {

// Worked-example factors: G1 = 1->2, 3->2 (a contraction) and G2 with
// self-loops at 1, 2, 5, 6, the 2-cycle 3<->4 and cross links 2->1, 2->3,
// 5->4, 5->6.
DiGraph example_g1();
DiGraph example_g2();

// 3-node factor with an unmatched node (path 1->2->3) and a directed 3-cycle.
DiGraph path_factor();
DiGraph cycle_factor();

// One parent node and one parent SCC each.
DiGraph mixed_parents_a();
DiGraph mixed_parents_b();

DiGraph single_node();
DiGraph self_loop_node();
DiGraph directed_cycle(std::size_t n);
DiGraph chain(std::size_t n);
// k leaves, each with a single link into the hub.
DiGraph star_in(std::size_t leaves);

struct NamedGraph {
    std::string name;
    DiGraph graph;
};

// Hand-picked graphs used by the "every fixture" properties.
std::vector<NamedGraph> fixture_set();

using Rng = std::mt19937_64;

DiGraph random_digraph(Rng& rng, std::size_t n, double edge_probability);
DiGraph random_connected_digraph(Rng& rng, std::size_t n, double edge_probability);
// Connected and containing a spanning cycle family (a random permutation
// is planted first).
DiGraph random_with_cycle_cover(Rng& rng, std::size_t n, double edge_probability);

std::vector<NodeIndex> random_subset(Rng& rng, std::size_t n, double probability);

} // namespace prodobs::testing
