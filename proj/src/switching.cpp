#include "switchhom/switching.hpp"

#include <algorithm>
#include <set>

namespace switchhom {

namespace {

void check_applicable(const MixedGraph& g, int v, const SwitchElement& p) {
    if (p.m() != g.m || p.n() != g.n)
        throw invalid_input_error("switch: element dimensions do not match the graph");
    if (v < 1 || v > g.vertex_count)
        throw invalid_input_error("switch: vertex " + std::to_string(v) + " out of range");
}

} // namespace

WorkingGraph::WorkingGraph(const MixedGraph& g) : base_(&g), adj_(g) {
    edge_colour_.reserve(g.edges.size());
    for (const auto& e : g.edges)
        edge_colour_.push_back(e.colour);
    arc_colour_.reserve(g.arcs.size());
    for (const auto& a : g.arcs)
        arc_colour_.push_back(a.colour);
    arc_reversed_.assign(g.arcs.size(), 0);
}

void WorkingGraph::switch_at(int v, const SwitchElement& p) {
    check_applicable(*base_, v, p);
    for (const auto& entry : adj_.at(v)) {
        if (entry.inc.kind == Kind::Edge) {
            Colour& c = edge_colour_[entry.inc.index];
            c = p.alpha(c);
        } else {
            Colour& c = arc_colour_[entry.inc.index];
            arc_reversed_[entry.inc.index] ^= static_cast<std::uint8_t>(p.flips(c));
            c = p.beta(c);
        }
    }
}

MixedGraph WorkingGraph::snapshot() const {
    MixedGraph out(base_->m, base_->n, base_->vertex_count);
    out.edges = base_->edges;
    out.arcs = base_->arcs;
    for (std::size_t i = 0; i < out.edges.size(); ++i)
        out.edges[i].colour = edge_colour_[i];
    for (std::size_t i = 0; i < out.arcs.size(); ++i) {
        out.arcs[i].colour = arc_colour_[i];
        if (arc_reversed_[i])
            std::swap(out.arcs[i].tail, out.arcs[i].head);
    }
    return out;
}

MixedGraph switch_vertex(const MixedGraph& g, int v, const SwitchElement& p) {
    check_applicable(g, v, p);
    MixedGraph out = g;
    for (auto& e : out.edges)
        if (e.u == v || e.v == v)
            e.colour = p.alpha(e.colour);
    for (auto& a : out.arcs)
        if (a.tail == v || a.head == v) {
            bool reverse = p.flips(a.colour);
            a.colour = p.beta(a.colour);
            if (reverse)
                std::swap(a.tail, a.head);
        }
    return out;
}

MixedGraph switch_set(const MixedGraph& g, const std::vector<int>& vertices,
                      const SwitchElement& p) {
    std::set<int> xs(vertices.begin(), vertices.end());
    for (int v : xs)
        check_applicable(g, v, p);
    MixedGraph out = g;
    for (auto& e : out.edges) {
        int inside = static_cast<int>(xs.count(e.u)) + static_cast<int>(xs.count(e.v));
        for (int k = 0; k < inside; ++k)
            e.colour = p.alpha(e.colour);
    }
    for (auto& a : out.arcs) {
        int inside = static_cast<int>(xs.count(a.tail)) + static_cast<int>(xs.count(a.head));
        for (int k = 0; k < inside; ++k) {
            bool reverse = p.flips(a.colour);
            a.colour = p.beta(a.colour);
            if (reverse)
                std::swap(a.tail, a.head);
        }
    }
    return out;
}

MixedGraph apply_sequence(const MixedGraph& g, const SwitchSequence& s) {
    if (s.empty())
        return g;
    WorkingGraph work(g);
    for (const auto& step : s.steps)
        work.switch_at(step.vertex, step.element);
    return work.snapshot();
}

SwitchSequence invert_sequence(const SwitchSequence& s) {
    SwitchSequence out;
    out.steps.reserve(s.size());
    for (auto it = s.steps.rbegin(); it != s.steps.rend(); ++it)
        out.steps.push_back(SwitchStep{it->vertex, inverse(it->element)});
    return out;
}

SwitchSequence compress_abelian(const SwitchSequence& s, const SwitchGroup& g) {
    if (!is_abelian(g))
        throw invalid_input_error("compress_abelian: group is not Abelian");
    for (const auto& step : s.steps)
        if (!g.contains(step.element))
            throw invalid_input_error("compress_abelian: sequence uses an element outside the group");

    std::vector<int> first_seen; // vertices in first-occurrence order
    std::vector<SwitchElement> product;
    std::vector<int> slot; // vertex -> index into product, lazily grown
    for (const auto& step : s.steps) {
        if (step.vertex >= static_cast<int>(slot.size()))
            slot.resize(step.vertex + 1, -1);
        if (slot[step.vertex] < 0) {
            slot[step.vertex] = static_cast<int>(first_seen.size());
            first_seen.push_back(step.vertex);
            product.push_back(step.element);
        } else {
            product[slot[step.vertex]] = compose(product[slot[step.vertex]], step.element);
        }
    }

    SwitchSequence out;
    for (std::size_t i = 0; i < first_seen.size(); ++i)
        if (!product[i].is_identity())
            out.steps.push_back(SwitchStep{first_seen[i], product[i]});
    return out;
}

} // namespace switchhom
