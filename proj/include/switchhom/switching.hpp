#pragma once

#include <vector>

#include "switchhom/mixed_graph.hpp"
#include "switchhom/perm_group.hpp"

namespace switchhom {

struct SwitchStep {
    int vertex = 0;
    SwitchElement element;

    friend bool operator==(const SwitchStep&, const SwitchStep&) = default;
};

struct SwitchSequence {
    std::vector<SwitchStep> steps;

    bool empty() const { return steps.empty(); }
    std::size_t size() const { return steps.size(); }

    friend bool operator==(const SwitchSequence&, const SwitchSequence&) = default;
};

// Recolour the incidences at v: edges by alpha, arcs by beta with the arc
// reversed when the element flips its old colour. Pure; returns a new graph.
MixedGraph switch_vertex(const MixedGraph& g, int v, const SwitchElement& p);

// Switch once at every vertex of the set with the same element. Incidences
// with both ends inside get the element applied twice.
MixedGraph switch_set(const MixedGraph& g, const std::vector<int>& vertices,
                      const SwitchElement& p);

// Left-to-right fold of switch_vertex.
MixedGraph apply_sequence(const MixedGraph& g, const SwitchSequence& s);

// Reversed order, each element inverted; undoes the sequence.
SwitchSequence invert_sequence(const SwitchSequence& s);

// For an Abelian group: combine the steps of each vertex into one, keeping
// first-occurrence vertex order and dropping identity steps. Applying the
// result equals applying s on every graph.
SwitchSequence compress_abelian(const SwitchSequence& s, const SwitchGroup& g);

// Mutable colour/direction state over a fixed underlying graph; lets long
// sequences run in O(sum of switched degrees) instead of copying the graph
// per step. The base graph must outlive this.
class WorkingGraph {
public:
    explicit WorkingGraph(const MixedGraph& g);

    void switch_at(int v, const SwitchElement& p);

    Colour edge_colour(int index) const { return edge_colour_[index]; }
    Colour arc_colour(int index) const { return arc_colour_[index]; }
    bool arc_reversed(int index) const { return arc_reversed_[index] != 0; }
    const MixedGraph& base() const { return *base_; }
    const Adjacency& adjacency() const { return adj_; }

    MixedGraph snapshot() const;

private:
    const MixedGraph* base_;
    Adjacency adj_;
    std::vector<Colour> edge_colour_;
    std::vector<Colour> arc_colour_;
    std::vector<std::uint8_t> arc_reversed_;
};

} // namespace switchhom
