// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical results.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "switchhom/kernels.hpp"
#include "switchhom/oracle.hpp"

namespace {

using namespace switchhom;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

MixedGraph random_bipartite(std::mt19937& rng, int vertices, int edges, int m) {
    MixedGraph g(m, 0, vertices);
    int half = vertices / 2;
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(g.edges.size()) < edges) {
        int u = 1 + static_cast<int>(rng() % half);
        int v = half + 1 + static_cast<int>(rng() % (vertices - half));
        if (!used.insert({u, v}).second)
            continue;
        g.add_edge(u, v, 1 + static_cast<int>(rng() % m));
    }
    return g;
}

void bench_apply(std::mt19937& rng, int vertices, int edges, int repeat) {
    const int m = 4;
    SwitchGroup grp = closure(m, 0, {SwitchElement({2, 3, 4, 1}, {}, {})});
    MixedGraph g = random_bipartite(rng, vertices, edges, m);

    VertexSwitchPlan plan;
    plan.element.reserve(vertices + 1);
    plan.rank.assign(vertices + 1, 0);
    plan.element.push_back(SwitchElement::identity(m, 0));
    for (int v = 1; v <= vertices; ++v) {
        plan.element.push_back(grp.elements()[rng() % grp.order()]);
        plan.rank[v] = v;
    }

    double serial_ms = 0, parallel_ms = 0;
    MixedGraph serial_out, parallel_out;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = Clock::now();
        serial_out = apply_vertex_switches_serial(g, plan);
        serial_ms += ms_since(t0);
        auto t1 = Clock::now();
        parallel_out = apply_vertex_switches(g, plan);
        parallel_ms += ms_since(t1);
    }
    bool equal = serial_out == parallel_out;
    std::printf("apply_vertex_switches  V=%d E=%d      serial %8.2f ms   omp %8.2f ms   "
                "speedup %.2fx   %s\n",
                vertices, edges, serial_ms / repeat, parallel_ms / repeat,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
}

void bench_oracle(std::mt19937& rng, int vertices, int incidences, int repeat) {
    SwitchGroup grp = closure(3, 0, {SwitchElement({2, 1, 3}, {}, {}),
                                     SwitchElement({2, 3, 1}, {}, {})});
    MixedGraph g(3, 0, vertices);
    std::set<std::pair<int, int>> used;
    while (static_cast<int>(g.edges.size()) < incidences) {
        int u = 1 + static_cast<int>(rng() % vertices);
        int v = 1 + static_cast<int>(rng() % vertices);
        if (u == v)
            continue;
        if (!used.insert(std::minmax(u, v)).second)
            continue;
        g.add_edge(u, v, 1 + static_cast<int>(rng() % 3));
    }

    double serial_ms = 0, parallel_ms = 0;
    std::size_t serial_states = 0, parallel_states = 0;
    for (int r = 0; r < repeat; ++r) {
        auto t0 = Clock::now();
        serial_states = reachable_configurations(g, grp, kDefaultStateCap, false).size();
        serial_ms += ms_since(t0);
        auto t1 = Clock::now();
        parallel_states = reachable_configurations(g, grp, kDefaultStateCap, true).size();
        parallel_ms += ms_since(t1);
    }
    bool equal = serial_states == parallel_states;
    std::printf("oracle_expansion       V=%d inc=%d states=%zu  serial %8.2f ms   omp %8.2f ms   "
                "speedup %.2fx   %s\n",
                vertices, incidences, serial_states, serial_ms / repeat, parallel_ms / repeat,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"switchhom kernel benchmark: serial reference vs OpenMP"};
    int vertices = 200'000;
    int edges = 600'000;
    int oracle_vertices = 8;
    int oracle_incidences = 11;
    int repeat = 3;
    unsigned seed = 20240811;
    app.add_option("--vertices", vertices, "vertices for the bulk-apply kernel");
    app.add_option("--edges", edges, "edges for the bulk-apply kernel");
    app.add_option("--oracle-vertices", oracle_vertices, "vertices for the oracle kernel");
    app.add_option("--oracle-incidences", oracle_incidences, "incidences for the oracle kernel");
    app.add_option("--repeat", repeat, "repetitions per kernel");
    app.add_option("--seed", seed, "rng seed");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", kernel_thread_count());
    std::mt19937 rng(seed);
    bench_apply(rng, vertices, edges, repeat);
    bench_oracle(rng, oracle_vertices, oracle_incidences, repeat);
    return 0;
}
