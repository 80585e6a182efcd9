#include "switchhom/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace switchhom {

VertexSwitchPlan VertexSwitchPlan::from_sequence(const MixedGraph& g, const SwitchSequence& s) {
    VertexSwitchPlan plan;
    plan.element.assign(g.vertex_count + 1, SwitchElement::identity(g.m, g.n));
    plan.rank.assign(g.vertex_count + 1, 0);
    int next_rank = 1;
    for (const auto& step : s.steps) {
        if (step.vertex < 1 || step.vertex > g.vertex_count)
            throw invalid_input_error("switch plan: vertex out of range");
        if (plan.rank[step.vertex] != 0)
            throw invalid_input_error("switch plan: sequence switches a vertex twice");
        plan.element[step.vertex] = step.element;
        plan.rank[step.vertex] = next_rank++;
    }
    return plan;
}

SwitchSequence VertexSwitchPlan::to_sequence() const {
    std::vector<int> vertices;
    for (int v = 1; v < static_cast<int>(element.size()); ++v)
        if (!element[v].is_identity())
            vertices.push_back(v);
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](int a, int b) { return rank[a] != rank[b] ? rank[a] < rank[b] : a < b; });
    SwitchSequence s;
    for (int v : vertices)
        s.steps.push_back(SwitchStep{v, element[v]});
    return s;
}

namespace {

struct Ordered {
    const SwitchElement* first;
    const SwitchElement* second;
};

inline Ordered order_ends(const VertexSwitchPlan& plan, int a, int b) {
    bool a_first = plan.rank[a] != plan.rank[b] ? plan.rank[a] < plan.rank[b] : a < b;
    if (a_first)
        return {&plan.element[a], &plan.element[b]};
    return {&plan.element[b], &plan.element[a]};
}

inline void transform_edge(Edge& e, const VertexSwitchPlan& plan) {
    auto [first, second] = order_ends(plan, e.u, e.v);
    e.colour = second->alpha(first->alpha(e.colour));
}

inline void transform_arc(Arc& a, const VertexSwitchPlan& plan) {
    auto [first, second] = order_ends(plan, a.tail, a.head);
    bool reversed = first->flips(a.colour);
    Colour c = first->beta(a.colour);
    reversed ^= second->flips(c);
    a.colour = second->beta(c);
    if (reversed)
        std::swap(a.tail, a.head);
}

void check_plan(const MixedGraph& g, const VertexSwitchPlan& plan) {
    if (static_cast<int>(plan.element.size()) != g.vertex_count + 1 ||
        plan.rank.size() != plan.element.size())
        throw invalid_input_error("switch plan: size does not match the graph");
    for (int v = 1; v <= g.vertex_count; ++v)
        if (plan.element[v].m() != g.m || plan.element[v].n() != g.n)
            throw invalid_input_error("switch plan: element dimensions do not match the graph");
}

} // namespace

MixedGraph apply_vertex_switches(const MixedGraph& g, const VertexSwitchPlan& plan) {
    check_plan(g, plan);
    MixedGraph out = g;
    const auto edge_count = static_cast<std::int64_t>(out.edges.size());
    const auto arc_count = static_cast<std::int64_t>(out.arcs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < edge_count; ++i)
        transform_edge(out.edges[i], plan);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < arc_count; ++i)
        transform_arc(out.arcs[i], plan);
    return out;
}

MixedGraph apply_vertex_switches_serial(const MixedGraph& g, const VertexSwitchPlan& plan) {
    check_plan(g, plan);
    MixedGraph out = g;
    for (auto& e : out.edges)
        transform_edge(e, plan);
    for (auto& a : out.arcs)
        transform_arc(a, plan);
    return out;
}

int kernel_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace switchhom
