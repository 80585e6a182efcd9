#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "switchhom/perm_group.hpp"

namespace switchhom {

struct Edge {
    int u = 0; // stored with u < v
    int v = 0;
    Colour colour = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
    int tail = 0;
    int head = 0;
    Colour colour = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

// Refers to g.edges[index] or g.arcs[index].
struct IncidenceRef {
    Kind kind = Kind::Edge;
    int index = -1;

    friend bool operator==(const IncidenceRef&, const IncidenceRef&) = default;
};

// Vertices are 1..vertex_count. Edges carry one of m colours, arcs one of n.
// Treated as immutable once loaded; switching operations return new graphs.
struct MixedGraph {
    int m = 0;
    int n = 0;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Arc> arcs;

    MixedGraph() = default;
    MixedGraph(int m_, int n_, int vertices) : m(m_), n(n_), vertex_count(vertices) {}

    void add_edge(int u, int v, Colour c);
    void add_arc(int tail, int head, Colour c);

    std::size_t incidence_count() const { return edges.size() + arcs.size(); }
    // Endpoints of an incidence; for arcs this is (tail, head).
    std::pair<int, int> ends(IncidenceRef inc) const;
    Colour colour_of(IncidenceRef inc) const;

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;
};

struct Violation {
    std::string message;
};

// nullopt when all invariants hold (no loops, at most one incidence per vertex
// pair, colours in range); otherwise names the first offender.
std::optional<Violation> validate(const MixedGraph& g);

struct Bipartition {
    // side[v] in {0, 1}; the lowest-index vertex of each component gets 0.
    std::vector<std::uint8_t> side; // index 0 unused
};

struct OddCycleWitness {
    std::vector<int> vertices; // closed odd walk; the wrap edge is implied
};

using BipartitionResult = std::variant<Bipartition, OddCycleWitness>;

BipartitionResult bipartition(const MixedGraph& g);

// BFS forest, lowest-index roots, neighbours explored in ascending order.
struct SpanningForest {
    struct Link {
        int parent = 0;
        IncidenceRef via;
    };
    std::vector<std::optional<Link>> link; // index 0 unused; roots have nullopt
    std::vector<int> roots;                // ascending
    std::vector<int> order;                // every parent before its children
    std::vector<int> depth;                // from component root
    std::vector<int> component;            // component index per vertex, by root rank

    int component_count() const { return static_cast<int>(roots.size()); }
    bool contains(IncidenceRef inc) const;

    std::vector<std::uint8_t> forest_edge; // per edge index
    std::vector<std::uint8_t> forest_arc;  // per arc index
};

SpanningForest spanning_forest(const MixedGraph& g);

struct FundamentalCycle {
    IncidenceRef cotree;   // not in the forest
    std::vector<int> path; // tree path from one end of cotree to the other
};

// One cycle per cotree incidence: all non-forest edges in input order, then
// all non-forest arcs in input order.
std::vector<FundamentalCycle> fundamental_cycles(const MixedGraph& g, const SpanningForest& f);

// CSR adjacency over all incidences, entries per vertex sorted by the other
// endpoint. Built once; valid as long as the graph's incidence lists live.
class Adjacency {
public:
    struct Entry {
        int other = 0;
        IncidenceRef inc;
    };

    explicit Adjacency(const MixedGraph& g);
    std::span<const Entry> at(int v) const {
        return {entries_.data() + offset_[v], static_cast<std::size_t>(offset_[v + 1] - offset_[v])};
    }

private:
    std::vector<int> offset_;
    std::vector<Entry> entries_;
};

} // namespace switchhom
