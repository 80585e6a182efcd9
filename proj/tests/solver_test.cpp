#include <doctest.h>

#include <random>

#include "support/catalog.hpp"
#include "support/random_instances.hpp"
#include "switchhom/oracle.hpp"
#include "switchhom/solver.hpp"

using namespace switchhom;
using namespace switchhom::testsupport;

namespace {

MixedGraph edge_cycle(int length, int m, Colour colour) {
    MixedGraph g(m, 0, length);
    for (int v = 1; v < length; ++v)
        g.add_edge(v, v + 1, colour);
    g.add_edge(1, length, colour);
    return g;
}

const NoCertificate& as_no(const Certificate& c) { return std::get<NoCertificate>(c); }
const YesCertificate& as_yes(const Certificate& c) { return std::get<YesCertificate>(c); }

} // namespace

TEST_CASE("decide_1col") {
    CHECK(is_yes(decide_1col(MixedGraph(2, 1, 5))));

    MixedGraph one_edge(1, 0, 2);
    one_edge.add_edge(1, 2, 1);
    Certificate no_edge = decide_1col(one_edge);
    REQUIRE_FALSE(is_yes(no_edge));
    CHECK(as_no(no_edge).reason == NoReason::HasIncidence);

    MixedGraph one_arc(0, 1, 2);
    one_arc.add_arc(1, 2, 1);
    CHECK_FALSE(is_yes(decide_1col(one_arc)));
}

TEST_CASE("decide_2col: degenerate and structural cases") {
    CHECK(as_yes(decide_2col(MixedGraph(2, 0, 0), trivial_m2())).target == TargetKind::K1);
    CHECK(as_yes(decide_2col(MixedGraph(2, 0, 3), trivial_m2())).target == TargetKind::K1);

    MixedGraph mixed(1, 1, 3);
    mixed.add_edge(1, 2, 1);
    mixed.add_arc(2, 3, 1);
    Certificate cert = decide_2col(mixed, closure(1, 1, {}));
    REQUIRE_FALSE(is_yes(cert));
    CHECK(as_no(cert).reason == NoReason::MixedEdgeArc);

    Certificate odd = decide_2col(edge_cycle(5, 2, 1), s2_m2());
    REQUIRE_FALSE(is_yes(odd));
    CHECK(as_no(odd).reason == NoReason::OddCycle);
    CHECK(as_no(odd).walk.size() == 5);

    Certificate mono = decide_2col(edge_cycle(4, 2, 1), s2_m2());
    REQUIRE(is_yes(mono));
    CHECK(as_yes(mono).sequence.empty());
    CHECK(as_yes(mono).colour == 1);
}

TEST_CASE("edge_2col: trees always map when the orbit check passes") {
    std::mt19937 rng(11001);
    for (int trial = 0; trial < 50; ++trial) {
        int vertices = uniform(rng, 2, 9);
        MixedGraph tree(3, 0, vertices);
        for (int v = 2; v <= vertices; ++v)
            tree.add_edge(uniform(rng, 1, v - 1), v, uniform(rng, 1, 3));
        Certificate cert = edge_2col(tree, s3_m3());
        REQUIRE(is_yes(cert));
        CHECK(verify_certificate(tree, s3_m3(), cert).ok);
        CHECK(as_yes(cert).sequence.size() <= static_cast<std::size_t>(vertices) - 1);
    }
}

TEST_CASE("edge_2col: the S2 parity cases on C4") {
    MixedGraph one_bad = edge_cycle(4, 2, 1);
    one_bad.edges[3].colour = 2;
    Certificate no = edge_2col(one_bad, s2_m2());
    REQUIRE_FALSE(is_yes(no));
    CHECK(as_no(no).reason == NoReason::BadCycle);
    CHECK(as_no(no).bad_i == 1);
    CHECK(as_no(no).bad_j == 2);
    CHECK(verify_certificate(one_bad, s2_m2(), no).ok);

    MixedGraph two_bad = edge_cycle(4, 2, 1);
    two_bad.edges[1].colour = 2;
    two_bad.edges[3].colour = 2;
    Certificate yes = edge_2col(two_bad, s2_m2());
    REQUIRE(is_yes(yes));
    CHECK(verify_certificate(two_bad, s2_m2(), yes).ok);
}

TEST_CASE("edge_2col: orbit obstruction names two edges") {
    MixedGraph g(4, 0, 3);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 3);
    SwitchGroup pairs = closure(4, 0, {edge_perm({2, 1, 4, 3})});
    Certificate cert = edge_2col(g, pairs);
    REQUIRE_FALSE(is_yes(cert));
    CHECK(as_no(cert).reason == NoReason::Orbit);
    CHECK(verify_certificate(g, pairs, cert).ok);
}

TEST_CASE("make_tree_monochromatic") {
    SUBCASE("already monochromatic: empty sequence") {
        MixedGraph path(2, 0, 3);
        path.add_edge(1, 2, 1);
        path.add_edge(2, 3, 1);
        CHECK(make_tree_monochromatic(path, spanning_forest(path), 1, s2_m2()).empty());
    }
    SUBCASE("path with both edges off-colour") {
        MixedGraph path(2, 0, 3);
        path.add_edge(1, 2, 2);
        path.add_edge(2, 3, 2);
        SwitchSequence seq = make_tree_monochromatic(path, spanning_forest(path), 1, s2_m2());
        // Switching the middle vertex recolours both edges at once, and the
        // identity step at vertex 3 is dropped.
        CHECK(seq.size() <= 2);
        CHECK_FALSE(seq.empty());
        MixedGraph switched = apply_sequence(path, seq);
        for (const auto& e : switched.edges)
            CHECK(e.colour == 1);
    }
    SUBCASE("star, replay check") {
        MixedGraph star(2, 0, 4);
        star.add_edge(1, 2, 2);
        star.add_edge(1, 3, 2);
        star.add_edge(1, 4, 2);
        SwitchSequence seq = make_tree_monochromatic(star, spanning_forest(star), 1, s2_m2());
        MixedGraph switched = apply_sequence(star, seq);
        for (const auto& e : switched.edges)
            CHECK(e.colour == 1);
    }
    SUBCASE("unreachable colour is a precondition violation") {
        MixedGraph path(2, 0, 2);
        path.add_edge(1, 2, 2);
        CHECK_THROWS_AS(make_tree_monochromatic(path, spanning_forest(path), 1, trivial_m2()),
                        invalid_input_error);
    }
}

TEST_CASE("lift_c4_witness: empty witness for the target colour itself") {
    MixedGraph g = edge_cycle(4, 3, 1);
    auto bip = std::get<Bipartition>(bipartition(g));
    SubstitutionClasses classes = substitution_classes(s3_m3());
    CHECK(lift_c4_witness(g, bip, IncidenceRef{Kind::Edge, 3}, 1, classes).empty());
}

TEST_CASE("lift_c4_witness: fixes the odd edge and preserves the rest") {
    std::mt19937 rng(11002);
    SubstitutionClasses classes = substitution_classes(s3_m3());
    for (int trial = 0; trial < 50; ++trial) {
        MixedGraph g = random_bipartite_edges(rng, uniform(rng, 4, 9), uniform(rng, 3, 12), 3);
        for (auto& e : g.edges)
            e.colour = 1;
        if (g.edges.empty())
            continue;
        int odd = uniform(rng, 0, static_cast<int>(g.edges.size()) - 1);
        g.edges[odd].colour = 2;

        auto bip = std::get<Bipartition>(bipartition(g));
        SwitchSequence seq = lift_c4_witness(g, bip, IncidenceRef{Kind::Edge, odd}, 1, classes);
        MixedGraph lifted = apply_sequence(g, seq);
        for (const auto& e : lifted.edges)
            CHECK(e.colour == 1);
    }
}

TEST_CASE("arcs_to_edges: encoding follows the tail side") {
    MixedGraph g(0, 2, 4);
    g.add_arc(1, 2, 1); // tail on side 0: colour 1
    g.add_arc(4, 3, 2); // vertex 3 roots its component on side 0, so tail 4 sits on side 1
    auto bip = std::get<Bipartition>(bipartition(g));
    MixedGraph reduced = arcs_to_edges(g, bip);
    CHECK(reduced.m == 4);
    CHECK(reduced.n == 0);
    REQUIRE(reduced.edges.size() == 2);
    CHECK(reduced.edges[0].colour == 1);
    CHECK(reduced.edges[1].colour == 4);

    MixedGraph empty(0, 2, 3);
    CHECK(arcs_to_edges(empty, std::get<Bipartition>(bipartition(empty))).edges.empty());

    MixedGraph has_edge(1, 1, 2);
    has_edge.add_edge(1, 2, 1);
    CHECK_THROWS_AS(arcs_to_edges(has_edge, Bipartition{{0, 0, 1}}), invalid_input_error);
}

TEST_CASE("arcs: solver handles per-component orientation freedom") {
    // Two single-arc components crossing opposite ways; no flips available.
    // Each component picks its own tail side, so this is a YES.
    MixedGraph g(0, 1, 4);
    g.add_arc(1, 2, 1);
    g.add_arc(4, 3, 1);
    SwitchGroup no_flip = closure(0, 1, {});
    Certificate cert = decide_2col(g, no_flip);
    REQUIRE(is_yes(cert));
    CHECK(as_yes(cert).target == TargetKind::T2);
    CHECK(verify_certificate(g, no_flip, cert).ok);
    CHECK(oracle_decide_2col(g, no_flip).yes.has_value());

    // A directed path crosses its component both ways: a genuine conflict.
    MixedGraph path(0, 1, 3);
    path.add_arc(1, 2, 1);
    path.add_arc(2, 3, 1);
    Certificate no = decide_2col(path, no_flip);
    REQUIRE_FALSE(is_yes(no));
    CHECK(as_no(no).reason == NoReason::DirectionConflict);
    CHECK(verify_certificate(path, no_flip, no).ok);
    CHECK_FALSE(oracle_decide_2col(path, no_flip).yes.has_value());

    // With a flip available the conflict dissolves.
    Certificate fixed = decide_2col(path, flip_01());
    REQUIRE(is_yes(fixed));
    CHECK(verify_certificate(path, flip_01(), fixed).ok);
}

TEST_CASE("arcs: colour orbits decide across components") {
    // Components stuck on different arc colours under a trivial group.
    MixedGraph g(0, 2, 4);
    g.add_arc(1, 2, 1);
    g.add_arc(3, 4, 2);
    SwitchGroup no_move = closure(0, 2, {});
    Certificate cert = decide_2col(g, no_move);
    REQUIRE_FALSE(is_yes(cert));
    CHECK(as_no(cert).reason == NoReason::Orbit);
    CHECK(verify_certificate(g, no_move, cert).ok);
    CHECK_FALSE(oracle_decide_2col(g, no_move).yes.has_value());

    // The swap+flip group merges everything into one orbit.
    Certificate yes = decide_2col(g, swap_flip_02());
    REQUIRE(is_yes(yes));
    CHECK(verify_certificate(g, swap_flip_02(), yes).ok);
}

TEST_CASE("np_gadget") {
    std::vector<std::pair<int, int>> triangle{{1, 2}, {2, 3}, {1, 3}};
    MixedGraph g = np_gadget(3, triangle, 2, 0);
    CHECK(g.edges.size() == 3);
    for (const auto& e : g.edges)
        CHECK(e.colour == 1);

    CHECK(np_gadget(0, {}, 1, 0).incidence_count() == 0);
    CHECK_THROWS_AS(np_gadget(3, triangle, 0, 1), invalid_input_error);

    std::mt19937 rng(11003);
    for (int trial = 0; trial < 30; ++trial) {
        MixedGraph classical = random_graph(rng, 8, 11, 1, 0);
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : classical.edges)
            edges.emplace_back(e.u, e.v);
        MixedGraph gadget = np_gadget(classical.vertex_count, edges, 2, 0);
        bool solver_yes = is_yes(decide_2col(gadget, s2_m2()));
        bool is_bipartite = std::holds_alternative<Bipartition>(bipartition(classical));
        CHECK(solver_yes == is_bipartite);
        CHECK(solver_yes == oracle_decide_2col(gadget, s2_m2()).yes.has_value());
    }
}

TEST_CASE("check_length_bound") {
    MixedGraph tree(2, 0, 4);
    tree.add_edge(1, 2, 2);
    tree.add_edge(2, 3, 2);
    tree.add_edge(3, 4, 2);
    Certificate cert = decide_2col(tree, s2_m2());
    REQUIRE(is_yes(cert));
    // On a forest the c_gamma term vanishes: at most V - 1 switches.
    CHECK(as_yes(cert).sequence.size() <= 3);
    CHECK(check_length_bound(tree, as_yes(cert), 0));

    Certificate mono = decide_2col(edge_cycle(6, 2, 1), s2_m2());
    CHECK(check_length_bound(edge_cycle(6, 2, 1), as_yes(mono), 1));

    YesCertificate k1{TargetKind::K1, 0, true, {}, {}};
    CHECK_THROWS_AS(check_length_bound(tree, k1, 1), invalid_input_error);
}

TEST_CASE("verify_certificate: basics and tampering") {
    CHECK(verify_certificate(MixedGraph(2, 0, 0), trivial_m2(),
                             YesCertificate{TargetKind::K1, 0, true, {}, {}})
              .ok);

    MixedGraph g = edge_cycle(4, 2, 1);
    g.edges[1].colour = 2;
    g.edges[3].colour = 2;
    Certificate cert = decide_2col(g, s2_m2());
    REQUIRE(is_yes(cert));
    REQUIRE(verify_certificate(g, s2_m2(), cert).ok);

    SUBCASE("tampered element") {
        YesCertificate bad = as_yes(cert);
        REQUIRE_FALSE(bad.sequence.empty());
        bad.sequence.steps[0].element = SwitchElement::identity(2, 0);
        VerifyResult result = verify_certificate(g, s2_m2(), bad);
        CHECK_FALSE(result.ok);
        CHECK_FALSE(result.diagnostics.empty());
    }
    SUBCASE("element outside the group") {
        YesCertificate bad = as_yes(cert);
        bad.sequence.steps.push_back(SwitchStep{1, edge_perm({1, 2})});
        bad.sequence.steps.back().element = edge_perm({2, 1});
        // still in the group; instead corrupt the map
        bad.side[1] ^= 1;
        CHECK_FALSE(verify_certificate(g, s2_m2(), bad).ok);
    }
    SUBCASE("wrong reason data") {
        NoCertificate fake;
        fake.reason = NoReason::OddCycle;
        fake.walk = {1, 2, 3};
        CHECK_FALSE(verify_certificate(g, s2_m2(), fake).ok);
    }
    SUBCASE("bad-cycle witness with the wrong target colour") {
        MixedGraph bad_graph = edge_cycle(4, 2, 1);
        bad_graph.edges[3].colour = 2;
        Certificate no = decide_2col(bad_graph, s2_m2());
        REQUIRE(as_no(no).reason == NoReason::BadCycle);
        NoCertificate forged = as_no(no);
        forged.bad_i = 2;
        CHECK_FALSE(verify_certificate(bad_graph, s2_m2(), forged).ok);
    }
}

TEST_CASE("verdict-only mode matches the certifying mode") {
    std::mt19937 rng(11004);
    for (const auto& entry : catalog()) {
        for (int trial = 0; trial < 40; ++trial) {
            MixedGraph g = random_graph(rng, 7, 10, entry.group.m(), entry.group.n());
            DecideOptions verdict_only;
            verdict_only.build_sequence = false;
            Certificate full = decide_2col(g, entry.group);
            Certificate quick = decide_2col(g, entry.group, verdict_only);
            CHECK(is_yes(full) == is_yes(quick));
            if (!is_yes(full)) {
                CHECK(as_no(full).reason == as_no(quick).reason);
                CHECK(as_no(full).walk == as_no(quick).walk);
            }
        }
    }
}

TEST_CASE("prop 2.1: a YES stays a YES for every target colour in the orbit") {
    std::mt19937 rng(11005);
    for (const auto& entry : catalog()) {
        for (int trial = 0; trial < 30; ++trial) {
            MixedGraph g = random_graph(rng, 6, 8, entry.group.m(), entry.group.n());
            Certificate cert = decide_2col(g, entry.group);
            if (!is_yes(cert) || as_yes(cert).target == TargetKind::K1)
                continue;
            Colour i = as_yes(cert).colour;
            Kind kind = as_yes(cert).target == TargetKind::K2 ? Kind::Edge : Kind::Arc;
            SwitchGroup action = kind == Kind::Edge ? project_edge_action(entry.group)
                                                    : project_arc_action(entry.group);
            for (Colour j :
                 orbit(action, kind == Kind::Edge ? Kind::Edge : Kind::Arc, i).members) {
                DecideOptions opts;
                opts.target_colour = j;
                Certificate again = decide_2col(g, entry.group, opts);
                REQUIRE(is_yes(again));
                CHECK(as_yes(again).colour == j);
                CHECK(verify_certificate(g, entry.group, again).ok);
            }
        }
    }
}
