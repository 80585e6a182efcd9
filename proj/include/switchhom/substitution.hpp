#pragma once

#include <array>
#include <map>
#include <unordered_map>
#include <vector>

#include "switchhom/perm_group.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

// Edge colours of the labelled 4-cycle v0 v1 v2 v3 v0; colours[k] is the
// colour of edge (v_k, v_{k+1 mod 4}), so colours[3] is the distinguished
// edge v3 v0.
struct C4State {
    std::array<Colour, 4> colours{1, 1, 1, 1};

    static C4State monochromatic(Colour i) { return C4State{{i, i, i, i}}; }
    // All edges colour i except v3 v0, which has colour j.
    static C4State nearly(Colour i, Colour j) { return C4State{{i, i, i, j}}; }

    friend bool operator==(const C4State&, const C4State&) = default;
};

struct C4Move {
    int vertex = 0; // 0..3
    SwitchElement element;
};

// Connected component of the C4 recolouring graph containing `start`, with
// predecessor data for path reconstruction.
class ReconfigurationComponent {
public:
    std::size_t size() const { return states_.size(); }
    const C4State& start() const { return states_.front(); }
    int start_eccentricity() const { return eccentricity_; }
    bool contains(const C4State& s) const;
    std::vector<C4State> states() const { return states_; }
    // Switches that turn start() into s, in application order.
    std::vector<C4Move> path_to(const C4State& s) const;

private:
    friend ReconfigurationComponent reconfiguration_component(const SwitchGroup&, const C4State&);
    std::vector<C4State> states_; // discovery order; [0] is the start
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<int> pred_;
    std::vector<C4Move> move_; // move that produced states_[k] from pred
    int eccentricity_ = 0;
    int m_ = 0;
};

// BFS over all single switches (4 vertices x group elements) restricted to
// the labelled C4. The group must act on edge colours only (n = 0).
ReconfigurationComponent reconfiguration_component(const SwitchGroup& g, const C4State& start);

struct C4WitnessStep {
    int position = 0; // C4 vertex 0..3
    SwitchElement element;
};

struct SubstitutionClasses {
    int m = 0;
    int c_gamma = 0; // max eccentricity over the monochromatic starts
    std::vector<std::vector<Colour>> members; // members[i-1] = sorted class of i

    bool in_class(Colour i, Colour j) const;
    // Switches turning the nearly-(i, j) C4 monochromatic of colour i.
    // Requires j in the class of i.
    const std::vector<C4WitnessStep>& witness(Colour i, Colour j) const;

    std::map<std::pair<Colour, Colour>, std::vector<C4WitnessStep>> witnesses;
};

// Class of i = colours j whose nearly-(i, j) C4 lies in the component of the
// monochromatic-i C4. Group must have n = 0.
SubstitutionClasses substitution_classes(const SwitchGroup& g);

// Process-wide memoised variant keyed by the group's element list.
const SubstitutionClasses& substitution_classes_cached(const SwitchGroup& g);

struct ClassStabilityReport {
    std::vector<int> lengths;
    std::vector<std::vector<std::vector<Colour>>> classes_by_length;
    std::vector<bool> equals_c4;
    bool all_equal = true;
};

// Recompute the classes on labelled cycles of the given even lengths and
// compare against the C4 classes.
ClassStabilityReport check_class_stability(const SwitchGroup& g, const std::vector<int>& lengths,
                                           std::size_t state_cap = 10'000'000);

} // namespace switchhom
