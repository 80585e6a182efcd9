#include <doctest.h>

#include <random>
#include <sstream>

#include "support/catalog.hpp"
#include "support/random_instances.hpp"
#include "switchhom/io.hpp"
#include "switchhom/solver.hpp"

using namespace switchhom;
using namespace switchhom::testsupport;

TEST_CASE("graph format: round trip and comments") {
    std::istringstream in("# a comment\n"
                          "mng 2 1\n"
                          "v 4\n"
                          "e 2 1 2   # canonicalised to 1 2\n"
                          "a 3 4 1\n");
    MixedGraph g = parse_graph(in);
    CHECK(g.m == 2);
    CHECK(g.n == 1);
    CHECK(g.vertex_count == 4);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].u == 1);
    CHECK(g.edges[0].v == 2);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0].tail == 3);

    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    CHECK(parse_graph(again) == g);
}

TEST_CASE("graph format: errors carry line numbers") {
    std::istringstream missing_header("v 3\n");
    CHECK_THROWS_WITH_AS(parse_graph(missing_header), "line 1: 'v' before the mng header",
                         parse_error);

    std::istringstream bad_int("mng 2 0\nv 3\ne 1 x 1\n");
    try {
        parse_graph(bad_int);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("group format: the documented example line") {
    std::istringstream in("grp 2 1\n"
                          "g 2 1 | 1 | -\n");
    SwitchGroup g = parse_group(in);
    CHECK(g.m() == 2);
    CHECK(g.n() == 1);
    CHECK(g.order() == 2); // the generator is an involution
    REQUIRE(g.generators().size() == 1);
    CHECK(g.generators()[0].alpha(1) == 2);
    CHECK(g.generators()[0].flips(1));
}

TEST_CASE("group format: empty sections use a dot") {
    std::ostringstream out;
    write_group(out, flip_01());
    CHECK(out.str() == "grp 0 1\ng . | 1 | -\n");

    std::ostringstream out2;
    write_group(out2, s2_m2());
    CHECK(out2.str() == "grp 2 0\ng 2 1 | . | .\n");

    std::istringstream again(out.str());
    SwitchGroup reparsed = parse_group(again);
    CHECK(reparsed.order() == flip_01().order());
}

TEST_CASE("group format: generator dimension mismatch") {
    std::istringstream in("grp 2 0\ng 2 1 3 | . | .\n");
    CHECK_THROWS_AS(parse_group(in), parse_error);
}

TEST_CASE("certificate format: YES round trip") {
    MixedGraph g(2, 0, 4);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 2);
    g.add_edge(3, 4, 1);
    Certificate cert = decide_2col(g, s2_m2());
    REQUIRE(is_yes(cert));

    std::ostringstream out;
    write_certificate(out, cert);
    std::istringstream in(out.str());
    Certificate reparsed = parse_certificate(in);
    CHECK(std::get<YesCertificate>(reparsed).sequence ==
          std::get<YesCertificate>(cert).sequence);
    CHECK(std::get<YesCertificate>(reparsed).side == std::get<YesCertificate>(cert).side);
    CHECK(verify_certificate(g, s2_m2(), reparsed).ok);
}

TEST_CASE("certificate format: NO round trips for every reason") {
    std::mt19937 rng(12001);
    int seen = 0;
    for (const auto& entry : catalog())
        for (int trial = 0; trial < 60; ++trial) {
            MixedGraph g = random_graph(rng, 6, 9, entry.group.m(), entry.group.n());
            Certificate cert = decide_2col(g, entry.group);
            if (is_yes(cert))
                continue;
            ++seen;
            std::ostringstream out;
            write_certificate(out, cert);
            std::istringstream in(out.str());
            Certificate reparsed = parse_certificate(in);
            const auto& lhs = std::get<NoCertificate>(cert);
            const auto& rhs = std::get<NoCertificate>(reparsed);
            CHECK(lhs.reason == rhs.reason);
            CHECK(lhs.walk == rhs.walk);
            CHECK(lhs.first == rhs.first);
            CHECK(lhs.second == rhs.second);
            CHECK(verify_certificate(g, entry.group, reparsed).ok);
        }
    CHECK(seen > 20);
}

TEST_CASE("certificate format: verdict-only certificates cannot be written") {
    YesCertificate yes;
    yes.target = TargetKind::K2;
    yes.colour = 1;
    yes.has_sequence = false;
    std::ostringstream out;
    CHECK_THROWS_AS(write_certificate(out, Certificate(yes)), invalid_input_error);
}

TEST_CASE("certificate format: parse errors") {
    std::istringstream bad("cert maybe\n");
    CHECK_THROWS_AS(parse_certificate(bad), parse_error);
    std::istringstream no_map("cert yes k2 1\ns 1 2 1 | . | .\n");
    CHECK_THROWS_AS(parse_certificate(no_map), parse_error);
    std::istringstream bad_reason("cert no because\nwalk 1 2 3\n");
    CHECK_THROWS_AS(parse_certificate(bad_reason), parse_error);
}
