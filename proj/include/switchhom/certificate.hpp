#pragma once

#include <variant>
#include <vector>

#include "switchhom/mixed_graph.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

enum class TargetKind { K1, K2, T2 };

// Switch sequence plus vertex mapping into the 2-vertex target. For K2 the
// target edge has colour `colour`; for T2 the target arc has colour `colour`
// and runs from side 0 to side 1. K1 carries neither sequence nor sides.
struct YesCertificate {
    TargetKind target = TargetKind::K1;
    Colour colour = 0;
    bool has_sequence = true; // false when solved in verdict-only mode
    SwitchSequence sequence;
    std::vector<std::uint8_t> side; // index 0 unused; empty for K1
};

enum class NoReason {
    OddCycle,          // walk: odd closed walk in the underlying graph
    MixedEdgeArc,      // first = an edge, second = an arc
    Orbit,             // first, second: incidences whose colours cannot meet
    DirectionConflict, // first, second: arcs crossing a component oppositely
    BadCycle,          // walk: even closed walk; (bad_i, bad_j) with j outside <i>
    HasIncidence,      // first: any incidence; refutes 1-colourability
};

struct NoCertificate {
    NoReason reason = NoReason::OddCycle;
    std::vector<int> walk;
    Colour bad_i = 0;
    Colour bad_j = 0;
    IncidenceRef first;
    IncidenceRef second;
};

using Certificate = std::variant<YesCertificate, NoCertificate>;

inline bool is_yes(const Certificate& c) { return std::holds_alternative<YesCertificate>(c); }

const char* no_reason_token(NoReason r);

} // namespace switchhom
