#include <doctest.h>

#include <random>

#include "support/random_instances.hpp"
#include "switchhom/mixed_graph.hpp"

using namespace switchhom;
using namespace switchhom::testsupport;

namespace {

MixedGraph cycle_graph(int length, int m, Colour colour) {
    MixedGraph g(m, 0, length);
    for (int v = 1; v < length; ++v)
        g.add_edge(v, v + 1, colour);
    g.add_edge(1, length, colour);
    return g;
}

bool walk_is_closed_odd(const MixedGraph& g, const std::vector<int>& walk) {
    if (walk.empty() || walk.size() % 2 == 0)
        return false;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        int a = walk[k];
        int b = walk[(k + 1) % walk.size()];
        bool found = false;
        for (const auto& e : g.edges)
            found = found || std::minmax(e.u, e.v) == std::minmax(a, b);
        for (const auto& arc : g.arcs)
            found = found || std::minmax(arc.tail, arc.head) == std::minmax(a, b);
        if (!found)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("validate: empty graph is fine") {
    CHECK_FALSE(validate(MixedGraph(3, 2, 0)));
    CHECK_FALSE(validate(MixedGraph(0, 0, 5)));
}

TEST_CASE("validate: edge and arc on one vertex pair") {
    MixedGraph g(1, 1, 2);
    g.add_edge(1, 2, 1);
    g.add_arc(2, 1, 1);
    auto violation = validate(g);
    REQUIRE(violation);
    CHECK(violation->message.find("e1") != std::string::npos);
    CHECK(violation->message.find("a1") != std::string::npos);
}

TEST_CASE("validate: loops and bad colours") {
    MixedGraph loop(1, 0, 3);
    loop.add_edge(3, 3, 1);
    REQUIRE(validate(loop));
    CHECK(validate(loop)->message.find("loop") != std::string::npos);

    MixedGraph bad_colour(2, 0, 2);
    bad_colour.add_edge(1, 2, 5);
    CHECK(validate(bad_colour));

    MixedGraph dup(2, 0, 2);
    dup.add_edge(1, 2, 1);
    dup.add_edge(2, 1, 2);
    CHECK(validate(dup));
}

TEST_CASE("bipartition: single edge") {
    MixedGraph g(1, 0, 2);
    g.add_edge(1, 2, 1);
    auto result = bipartition(g);
    auto* sides = std::get_if<Bipartition>(&result);
    REQUIRE(sides);
    CHECK(sides->side[1] == 0);
    CHECK(sides->side[2] == 1);
}

TEST_CASE("bipartition: triangle yields an odd cycle") {
    auto result = bipartition(cycle_graph(3, 1, 1));
    auto* odd = std::get_if<OddCycleWitness>(&result);
    REQUIRE(odd);
    CHECK(odd->vertices.size() == 3);
}

TEST_CASE("bipartition: C6 alternates") {
    auto result = bipartition(cycle_graph(6, 1, 1));
    auto* sides = std::get_if<Bipartition>(&result);
    REQUIRE(sides);
    for (int v = 1; v <= 6; ++v)
        CHECK(sides->side[v] == (v % 2 == 0 ? 1 : 0));
}

TEST_CASE("spanning_forest: path") {
    MixedGraph g(1, 0, 3);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 1);
    SpanningForest f = spanning_forest(g);
    CHECK(f.order == std::vector<int>{1, 2, 3});
    CHECK(f.roots == std::vector<int>{1});
    CHECK_FALSE(f.link[1]);
    CHECK(f.link[2]->parent == 1);
    CHECK(f.link[3]->parent == 2);
}

TEST_CASE("spanning_forest: C4 leaves one cotree edge") {
    SpanningForest f = spanning_forest(cycle_graph(4, 1, 1));
    int forest_edges = 0;
    for (auto bit : f.forest_edge)
        forest_edges += bit;
    CHECK(forest_edges == 3);
}

TEST_CASE("spanning_forest: two disjoint edges give two roots") {
    MixedGraph g(1, 0, 4);
    g.add_edge(1, 2, 1);
    g.add_edge(3, 4, 1);
    SpanningForest f = spanning_forest(g);
    CHECK(f.roots == std::vector<int>{1, 3});
    CHECK(f.component[2] == 0);
    CHECK(f.component[4] == 1);
}

TEST_CASE("fundamental_cycles: examples") {
    MixedGraph tree(1, 0, 3);
    tree.add_edge(1, 2, 1);
    tree.add_edge(1, 3, 1);
    CHECK(fundamental_cycles(tree, spanning_forest(tree)).empty());

    MixedGraph c4 = cycle_graph(4, 1, 1);
    auto cycles = fundamental_cycles(c4, spanning_forest(c4));
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].path.size() == 4);

    MixedGraph k4(1, 0, 4);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v)
            k4.add_edge(u, v, 1);
    CHECK(fundamental_cycles(k4, spanning_forest(k4)).size() == 3);
}

TEST_CASE("random graphs: cycle count formula, order validity, witness checks") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 200; ++trial) {
        MixedGraph g = random_graph(rng, 9, 14, 3, 2);
        REQUIRE_FALSE(validate(g));
        SpanningForest f = spanning_forest(g);

        auto cycles = fundamental_cycles(g, f);
        long long expected = static_cast<long long>(g.incidence_count()) - g.vertex_count +
                             f.component_count();
        CHECK(static_cast<long long>(cycles.size()) == expected);

        // parent-before-children: a single scan sees every parent first
        std::vector<int> seen_at(g.vertex_count + 1, -1);
        for (int k = 0; k < static_cast<int>(f.order.size()); ++k)
            seen_at[f.order[k]] = k;
        for (int v = 1; v <= g.vertex_count; ++v) {
            REQUIRE(seen_at[v] >= 0);
            if (f.link[v])
                CHECK(seen_at[f.link[v]->parent] < seen_at[v]);
        }

        auto result = bipartition(g);
        if (auto* odd = std::get_if<OddCycleWitness>(&result)) {
            CHECK(walk_is_closed_odd(g, odd->vertices));
        } else {
            auto& sides = std::get<Bipartition>(result);
            for (const auto& e : g.edges)
                CHECK(sides.side[e.u] != sides.side[e.v]);
            for (const auto& a : g.arcs)
                CHECK(sides.side[a.tail] != sides.side[a.head]);
        }
    }
}

TEST_CASE("fundamental cycle paths close against their cotree incidence") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 50; ++trial) {
        MixedGraph g = random_graph(rng, 8, 12, 2, 1);
        SpanningForest f = spanning_forest(g);
        for (const auto& cycle : fundamental_cycles(g, f)) {
            CHECK_FALSE(f.contains(cycle.cotree));
            auto [a, b] = g.ends(cycle.cotree);
            CHECK(cycle.path.front() == a);
            CHECK(cycle.path.back() == b);
        }
    }
}
