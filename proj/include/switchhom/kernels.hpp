#pragma once

#include <optional>
#include <span>

#include "switchhom/switching.hpp"

namespace switchhom {

// One switch per vertex, applied in rank order. Equivalent to running the
// steps as a sequence sorted by rank, but each incidence is computed
// independently, which is what makes the loop data-parallel: an incidence
// only sees the elements at its two endpoints, applied lower rank first.
//
// elements/rank are indexed by vertex (size vertex_count + 1, slot 0 unused);
// rank ties are broken by vertex index, matching ascending-vertex emission.
struct VertexSwitchPlan {
    std::vector<SwitchElement> element; // identity where a vertex is untouched
    std::vector<int> rank;              // application order, any ints

    static VertexSwitchPlan from_sequence(const MixedGraph& g, const SwitchSequence& s);
    SwitchSequence to_sequence() const; // rank order; identities dropped
};

// OpenMP-parallel over incidences (falls back to serial without OpenMP).
MixedGraph apply_vertex_switches(const MixedGraph& g, const VertexSwitchPlan& plan);

// Serial reference for the kernel above; kept for tests and the benchmark.
MixedGraph apply_vertex_switches_serial(const MixedGraph& g, const VertexSwitchPlan& plan);

int kernel_thread_count();

} // namespace switchhom
