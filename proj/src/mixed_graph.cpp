#include "switchhom/mixed_graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace switchhom {

void MixedGraph::add_edge(int u, int v, Colour c) {
    if (u > v)
        std::swap(u, v);
    edges.push_back(Edge{u, v, c});
}

void MixedGraph::add_arc(int tail, int head, Colour c) {
    arcs.push_back(Arc{tail, head, c});
}

std::pair<int, int> MixedGraph::ends(IncidenceRef inc) const {
    if (inc.kind == Kind::Edge)
        return {edges[inc.index].u, edges[inc.index].v};
    return {arcs[inc.index].tail, arcs[inc.index].head};
}

Colour MixedGraph::colour_of(IncidenceRef inc) const {
    return inc.kind == Kind::Edge ? edges[inc.index].colour : arcs[inc.index].colour;
}

namespace {

std::string incidence_name(const MixedGraph& g, IncidenceRef inc) {
    auto [a, b] = g.ends(inc);
    return (inc.kind == Kind::Edge ? "edge e" : "arc a") + std::to_string(inc.index + 1) + " (" +
           std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

std::optional<Violation> validate(const MixedGraph& g) {
    if (g.m < 0 || g.n < 0 || g.vertex_count < 0)
        return Violation{"negative colour count or vertex count"};

    std::map<std::pair<int, int>, IncidenceRef> seen;
    auto check = [&](IncidenceRef inc) -> std::optional<Violation> {
        auto [a, b] = g.ends(inc);
        if (a < 1 || a > g.vertex_count || b < 1 || b > g.vertex_count)
            return Violation{incidence_name(g, inc) + ": vertex out of range"};
        if (a == b)
            return Violation{incidence_name(g, inc) + ": loop"};
        Colour c = g.colour_of(inc);
        int range = inc.kind == Kind::Edge ? g.m : g.n;
        if (c < 1 || c > range)
            return Violation{incidence_name(g, inc) + ": colour " + std::to_string(c) +
                             " out of range [1.." + std::to_string(range) + "]"};
        auto key = std::minmax(a, b);
        auto [it, fresh] = seen.emplace(key, inc);
        if (!fresh)
            return Violation{"vertex pair (" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + ") carries both " +
                             incidence_name(g, it->second) + " and " + incidence_name(g, inc)};
        return std::nullopt;
    };

    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (auto v = check(IncidenceRef{Kind::Edge, i}))
            return v;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i)
        if (auto v = check(IncidenceRef{Kind::Arc, i}))
            return v;
    return std::nullopt;
}

Adjacency::Adjacency(const MixedGraph& g) {
    offset_.assign(g.vertex_count + 2, 0);
    auto count = [&](int a, int b) {
        ++offset_[a + 1];
        ++offset_[b + 1];
    };
    for (const auto& e : g.edges)
        count(e.u, e.v);
    for (const auto& a : g.arcs)
        count(a.tail, a.head);
    for (std::size_t i = 1; i < offset_.size(); ++i)
        offset_[i] += offset_[i - 1];
    entries_.resize(offset_.back());
    std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
    auto place = [&](int a, int b, IncidenceRef inc) {
        entries_[cursor[a]++] = Entry{b, inc};
        entries_[cursor[b]++] = Entry{a, inc};
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        place(g.edges[i].u, g.edges[i].v, IncidenceRef{Kind::Edge, i});
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i)
        place(g.arcs[i].tail, g.arcs[i].head, IncidenceRef{Kind::Arc, i});
    for (int v = 1; v <= g.vertex_count; ++v)
        std::sort(entries_.begin() + offset_[v], entries_.begin() + offset_[v + 1],
                  [](const Entry& x, const Entry& y) {
                      if (x.other != y.other)
                          return x.other < y.other;
                      if (x.inc.kind != y.inc.kind)
                          return x.inc.kind == Kind::Edge;
                      return x.inc.index < y.inc.index;
                  });
}

bool SpanningForest::contains(IncidenceRef inc) const {
    return inc.kind == Kind::Edge ? forest_edge[inc.index] != 0 : forest_arc[inc.index] != 0;
}

SpanningForest spanning_forest(const MixedGraph& g) {
    Adjacency adj(g);
    SpanningForest f;
    f.link.assign(g.vertex_count + 1, std::nullopt);
    f.depth.assign(g.vertex_count + 1, 0);
    f.component.assign(g.vertex_count + 1, -1);
    f.forest_edge.assign(g.edges.size(), 0);
    f.forest_arc.assign(g.arcs.size(), 0);
    f.order.reserve(g.vertex_count);

    std::vector<int> queue;
    queue.reserve(g.vertex_count);
    for (int root = 1; root <= g.vertex_count; ++root) {
        if (f.component[root] >= 0)
            continue;
        int comp = static_cast<int>(f.roots.size());
        f.roots.push_back(root);
        f.component[root] = comp;
        std::size_t head = queue.size();
        queue.push_back(root);
        f.order.push_back(root);
        while (head < queue.size()) {
            int u = queue[head++];
            for (const auto& entry : adj.at(u)) {
                int w = entry.other;
                if (f.component[w] >= 0)
                    continue;
                f.component[w] = comp;
                f.depth[w] = f.depth[u] + 1;
                f.link[w] = SpanningForest::Link{u, entry.inc};
                if (entry.inc.kind == Kind::Edge)
                    f.forest_edge[entry.inc.index] = 1;
                else
                    f.forest_arc[entry.inc.index] = 1;
                queue.push_back(w);
                f.order.push_back(w);
            }
        }
    }
    return f;
}

namespace {

// Vertices from a to b through the forest, both endpoints included.
std::vector<int> tree_path(const SpanningForest& f, int a, int b) {
    std::vector<int> up_a, up_b;
    int x = a, y = b;
    while (f.depth[x] > f.depth[y]) {
        up_a.push_back(x);
        x = f.link[x]->parent;
    }
    while (f.depth[y] > f.depth[x]) {
        up_b.push_back(y);
        y = f.link[y]->parent;
    }
    while (x != y) {
        up_a.push_back(x);
        up_b.push_back(y);
        x = f.link[x]->parent;
        y = f.link[y]->parent;
    }
    up_a.push_back(x); // the common ancestor
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

} // namespace

BipartitionResult bipartition(const MixedGraph& g) {
    SpanningForest f = spanning_forest(g);
    // Forest depth parity is a proper 2-colouring unless some non-forest
    // incidence joins equal parities; that incidence closes an odd cycle.
    auto scan = [&](IncidenceRef inc) -> std::optional<OddCycleWitness> {
        if (f.contains(inc))
            return std::nullopt;
        auto [a, b] = g.ends(inc);
        if (((f.depth[a] ^ f.depth[b]) & 1) == 0)
            return OddCycleWitness{tree_path(f, a, b)};
        return std::nullopt;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (auto w = scan(IncidenceRef{Kind::Edge, i}))
            return *w;
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i)
        if (auto w = scan(IncidenceRef{Kind::Arc, i}))
            return *w;

    Bipartition b;
    b.side.assign(g.vertex_count + 1, 0);
    for (int v = 1; v <= g.vertex_count; ++v)
        b.side[v] = static_cast<std::uint8_t>(f.depth[v] & 1);
    return b;
}

std::vector<FundamentalCycle> fundamental_cycles(const MixedGraph& g, const SpanningForest& f) {
    std::vector<FundamentalCycle> cycles;
    auto add = [&](IncidenceRef inc) {
        if (f.contains(inc))
            return;
        auto [a, b] = g.ends(inc);
        cycles.push_back(FundamentalCycle{inc, tree_path(f, a, b)});
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        add(IncidenceRef{Kind::Edge, i});
    for (int i = 0; i < static_cast<int>(g.arcs.size()); ++i)
        add(IncidenceRef{Kind::Arc, i});
    return cycles;
}

} // namespace switchhom
