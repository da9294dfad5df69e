#include "fixtures.hpp"
#include "oracles.hpp"

#include "prodobs/matching.hpp"
#include "prodobs/product.hpp"
#include "prodobs/structure.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace prodobs;
using namespace prodobs::testing;

namespace {

std::set<std::set<std::string>> label_sets(const DiGraph& g, const std::vector<std::vector<NodeIndex>>& groups)
{
    std::set<std::set<std::string>> out;
    for (const auto& grp : groups) {
        std::set<std::string> s;
        for (auto v : grp)
            s.insert(g.label(v));
        out.insert(s);
    }
    return out;
}

} // namespace

TEST_CASE("scc_decompose on example G2")
{
    auto g = example_g2();
    auto d = scc_decompose(g);
    CHECK(d.count() == 5);
    CHECK(label_sets(g, d.components) ==
          std::set<std::set<std::string>>{{"1"}, {"2"}, {"3", "4"}, {"5"}, {"6"}});
}

TEST_CASE("scc_decompose small cases")
{
    auto cyc = scc_decompose(directed_cycle(3));
    CHECK(cyc.count() == 1);
    CHECK(cyc.components[0].size() == 3);

    auto ch = scc_decompose(chain(3));
    CHECK(ch.count() == 3);
    CHECK(ch.condensation == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(ch.components[0] == std::vector<NodeIndex>{0});
    CHECK(ch.components[2] == std::vector<NodeIndex>{2});
}

TEST_CASE("component numbering is topological with sinks after their ancestors")
{
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        auto g = random_digraph(rng, 1 + i % 10, 0.2);
        auto d = scc_decompose(g);
        for (const auto& e : d.condensation)
            CHECK(e.from < e.to);
        std::vector<bool> covered(g.size(), false);
        for (const auto& c : d.components)
            for (auto v : c) {
                CHECK_FALSE(covered[v]);
                covered[v] = true;
            }
        CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
        CHECK(scc_decompose(g).component_of == d.component_of);
    }
}

TEST_CASE("SCCs match the transitive-closure oracle for n <= 8")
{
    Rng rng(1234);
    for (int i = 0; i < 500; ++i) {
        auto g = random_digraph(rng, 1 + i % 8, 0.1 + 0.05 * (i % 7));
        auto d = scc_decompose(g);
        auto rep = scc_representatives(g);
        for (NodeIndex u = 0; u < g.size(); ++u)
            for (NodeIndex v = 0; v < g.size(); ++v)
                CHECK((d.component_of[u] == d.component_of[v]) == (rep[u] == rep[v]));
    }
}

TEST_CASE("classify_parents")
{
    auto g2 = example_g2();
    auto p2 = classify_parents(g2, scc_decompose(g2));
    CHECK(label_sets(g2, p2.parent_sccs) == std::set<std::set<std::string>>{{"1"}, {"3", "4"}, {"6"}});
    CHECK(p2.parent_nodes.empty());

    auto g1 = example_g1();
    auto p1 = classify_parents(g1, scc_decompose(g1));
    CHECK(p1.parent_sccs.empty());
    CHECK(p1.parent_nodes == std::vector<NodeIndex>{1});

    auto s = self_loop_node();
    auto ps = classify_parents(s, scc_decompose(s));
    CHECK(ps.parent_sccs.size() == 1);
    CHECK(ps.parent_nodes.empty());

    auto iso = single_node();
    CHECK(classify_parents(iso, scc_decompose(iso)).parent_nodes.size() == 1);
}

TEST_CASE("count_parents")
{
    CHECK(count_parents(example_g2()) == 3);
    CHECK(count_parents(example_g1()) == 1);
    CHECK(count_parents(directed_cycle(5)) == 1);
}

TEST_CASE("every connected graph has a parent")
{
    for (const auto& f : fixture_set()) {
        CAPTURE(f.name);
        CHECK(count_parents(f.graph) >= 1);
    }
}

TEST_CASE("parent sets match the sink-class oracle")
{
    Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        auto g = random_digraph(rng, 1 + i % 8, 0.25);
        auto classes = sink_classes(g);
        CHECK(count_parents(g) == classes.size());
    }
}

TEST_CASE("product SCC and parent lifting")
{
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        auto g1 = random_connected_digraph(rng, 1 + i % 5, 0.3);
        auto g2 = random_connected_digraph(rng, 1 + (i / 5) % 5, 0.3);
        auto p = cartesian_product(g1, g2);
        auto d1 = scc_decompose(g1);
        auto d2 = scc_decompose(g2);
        auto dp = scc_decompose(p.graph);

        // S_i x S_j is inside one SCC
        for (const auto& c1 : d1.components)
            for (const auto& c2 : d2.components) {
                auto ref = dp.component_of[p.index_of(c1.front(), c2.front())];
                for (auto a : c1)
                    for (auto b : c2)
                        CHECK(dp.component_of[p.index_of(a, b)] == ref);
            }

        // each pair of factor parents is exactly one product parent, of the
        // predicted kind, and nothing else is a parent
        auto pc1 = classify_parents(g1, d1);
        auto pc2 = classify_parents(g2, d2);
        auto pcp = classify_parents(p.graph, dp);
        std::set<std::size_t> lifted;
        std::size_t expected_nodes = 0;
        for (auto s1 : d1.sinks())
            for (auto s2 : d2.sinks()) {
                auto c = dp.component_of[p.index_of(d1.components[s1].front(), d2.components[s2].front())];
                CHECK(dp.components[c].size() == d1.components[s1].size() * d2.components[s2].size());
                lifted.insert(c);
                bool node1 = std::count(pc1.parent_node_components.begin(), pc1.parent_node_components.end(), s1) > 0;
                bool node2 = std::count(pc2.parent_node_components.begin(), pc2.parent_node_components.end(), s2) > 0;
                if (node1 && node2)
                    ++expected_nodes;
            }
        auto sinks = dp.sinks();
        CHECK(std::set<std::size_t>(sinks.begin(), sinks.end()) == lifted);
        CHECK(pcp.parent_nodes.size() == expected_nodes);
        CHECK(count_parents(p.graph) == count_parents(g1) * count_parents(g2));
    }
}

TEST_CASE("parent nodes are unmatched")
{
    for (const auto& f : fixture_set()) {
        CAPTURE(f.name);
        auto pc = classify_parents(f.graph, scc_decompose(f.graph));
        auto m = maximum_matching(f.graph);
        for (auto v : pc.parent_nodes)
            CHECK(std::count(m.unmatched_nodes.begin(), m.unmatched_nodes.end(), v) == 1);
    }
}
