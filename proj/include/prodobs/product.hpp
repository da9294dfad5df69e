#pragma once

#include "prodobs/graph.hpp"

#include <string_view>
#include <vector>

namespace prodobs {

inline constexpr std::string_view kCompositeSeparator = "|";

// Cartesian product g1 □ g2. Node (a, b) sits at index a * n2 + b and is
// labelled "a|b" using the factor labels.
struct ProductGraph {
    DiGraph graph;
    std::vector<NodeIndex> left_of;
    std::vector<NodeIndex> right_of;
    std::size_t left_size = 0;
    std::size_t right_size = 0;

    NodeIndex index_of(NodeIndex left, NodeIndex right) const { return left * right_size + right; }
};

// (a,b)->(a',b') iff (a == a' and b->b' in g2) or (b == b' and a->a' in g1).
// Throws EmptyFactor for a zero-node factor and LabelCollision when two
// composite labels coincide (possible only if factor labels contain '|').
ProductGraph cartesian_product(const DiGraph& g1, const DiGraph& g2);

// True iff a|b -> b|a maps p12's edge set onto p21's. Throws SizeMismatch
// when the node counts differ.
bool is_isomorphic_swap(const ProductGraph& p12, const ProductGraph& p21);

} // namespace prodobs
