#pragma once

#include <optional>
#include <span>
#include <string>

#include "switchhom/certificate.hpp"
#include "switchhom/mixed_graph.hpp"
#include "switchhom/substitution.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

struct DecideOptions {
    // Verdict-only mode: skip materialising the switch sequence (the
    // per-cotree-edge lifts are the expensive part on big YES instances).
    bool build_sequence = true;
    // Force the target colour (edge colour, or arc colour for arcs-only
    // inputs) instead of the lowest colour appearing. Must share an orbit
    // with a colour that occurs.
    std::optional<Colour> target_colour;
};

// Homomorphism to a single vertex: possible exactly when g has no incidences.
Certificate decide_1col(const MixedGraph& g);

// The certifying decision procedure for 2-vertex targets.
Certificate decide_2col(const MixedGraph& g, const SwitchGroup& grp,
                        const DecideOptions& opts = {});

// Edges-only front end against an edge-colour group (n = 0); certificates
// carry elements of edge_grp itself.
Certificate edge_2col(const MixedGraph& g, const SwitchGroup& edge_grp,
                      const DecideOptions& opts = {});

// One switch per non-root vertex in parent-before-children order, each the
// lexicographically least group element taking the current parent-edge colour
// to i; identity steps are dropped. Requires every edge colour to reach i.
SwitchSequence make_tree_monochromatic(const MixedGraph& g, const SpanningForest& f, Colour i,
                                       const SwitchGroup& grp);

// Expand the stored C4 witness for (target, colour of the cotree edge) into
// switches on the cotree edge's component: position 0 switches u, 3 switches
// v, 2 the rest of u's side, 1 the rest of v's side. Edges of colour `target`
// are preserved and the cotree edge ends up with colour `target`.
SwitchSequence lift_c4_witness(const MixedGraph& g, const Bipartition& bip, IncidenceRef cotree,
                               Colour target, const SubstitutionClasses& classes);

// Encode an arcs-only bipartite graph as a 2n-edge-coloured graph: an arc of
// colour c becomes an edge of colour c when its tail is on side 0 and colour
// n + c otherwise. Pairs with arc_group_to_edge_group.
MixedGraph arcs_to_edges(const MixedGraph& g, const Bipartition& bip);

struct VerifyResult {
    bool ok = false;
    std::string diagnostics;
};

// Re-check a certificate against graph and group only: YES certificates are
// replayed and the target conditions tested; NO witnesses are re-derived.
// Never throws; failures come back as ok = false with a message.
VerifyResult verify_certificate(const MixedGraph& g, const SwitchGroup& grp,
                                const Certificate& cert);

// Classical graph to (m, n)-mixed graph: every edge gets colour 1.
MixedGraph np_gadget(int vertex_count, std::span<const std::pair<int, int>> classical_edges,
                     int m, int n);

// |sequence| <= sum over components of (V - 1) + c_gamma * V * (inc - V + 1).
bool check_length_bound(const MixedGraph& g, const YesCertificate& cert, int c_gamma);

} // namespace switchhom
