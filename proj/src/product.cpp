#include "prodobs/product.hpp"

#include "prodobs/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace prodobs {

ProductGraph cartesian_product(const DiGraph& g1, const DiGraph& g2)
{
    if (g1.empty() || g2.empty())
        throw Error(ErrorCode::EmptyFactor, "Cartesian product needs two nonempty factors");

    ProductGraph p;
    p.left_size = g1.size();
    p.right_size = g2.size();
    const auto n = p.left_size * p.right_size;

    std::vector<std::string> labels;
    labels.reserve(n);
    p.left_of.reserve(n);
    p.right_of.reserve(n);
    std::unordered_set<std::string> seen;
    for (NodeIndex a = 0; a < p.left_size; ++a) {
        for (NodeIndex b = 0; b < p.right_size; ++b) {
            auto label = g1.label(a) + std::string(kCompositeSeparator) + g2.label(b);
            if (!seen.insert(label).second)
                throw Error(ErrorCode::LabelCollision, "composite label '" + label + "' is ambiguous");
            labels.push_back(std::move(label));
            p.left_of.push_back(a);
            p.right_of.push_back(b);
        }
    }

    std::vector<Edge> edges;
    edges.reserve(p.left_size * g2.edge_count() + p.right_size * g1.edge_count());
    for (NodeIndex a = 0; a < p.left_size; ++a)
        for (const auto& e : g2.edges())
            edges.push_back({p.index_of(a, e.from), p.index_of(a, e.to)});
    for (NodeIndex b = 0; b < p.right_size; ++b)
        for (const auto& e : g1.edges())
            edges.push_back({p.index_of(e.from, b), p.index_of(e.to, b)});
    // A self-loop in each factor lands on the same product self-loop; keep one.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    p.graph = DiGraph(std::move(labels), std::move(edges));
    return p;
}

bool is_isomorphic_swap(const ProductGraph& p12, const ProductGraph& p21)
{
    if (p12.graph.size() != p21.graph.size() || p12.left_size != p21.right_size ||
        p12.right_size != p21.left_size)
        throw Error(ErrorCode::SizeMismatch, "product graphs have incompatible shapes");
    if (p12.graph.edge_count() != p21.graph.edge_count())
        return false;

    auto swap_index = [&](NodeIndex v) { return p21.index_of(p12.right_of[v], p12.left_of[v]); };
    std::vector<Edge> mapped;
    mapped.reserve(p12.graph.edge_count());
    for (const auto& e : p12.graph.edges())
        mapped.push_back({swap_index(e.from), swap_index(e.to)});
    std::sort(mapped.begin(), mapped.end());
    return mapped == p21.graph.edges();
}

} // namespace prodobs
