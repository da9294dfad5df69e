#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace prodobs {

inline constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

struct BipartiteMatching {
    std::vector<std::size_t> left_mate;   // right vertex or kUnmatched
    std::vector<std::size_t> right_mate;  // left vertex or kUnmatched
    std::size_t size = 0;
};

// Hopcroft-Karp on left vertices 0..adjacency.size()-1 and right vertices
// 0..right_count-1. Phases scan free left vertices in ascending order and
// neighbours in the order given, so the result is reproducible.
BipartiteMatching hopcroft_karp(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t right_count);

struct AlternatingReach {
    std::vector<bool> left;
    std::vector<bool> right;
};

// Vertices reachable from the given left roots by alternating paths
// (unmatched edge left->right, matched edge right->left).
AlternatingReach alternating_reach(const std::vector<std::vector<std::size_t>>& adjacency,
                                   const BipartiteMatching& matching,
                                   const std::vector<std::size_t>& left_roots);

} // namespace prodobs
