#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "switchhom/certificate.hpp"
#include "switchhom/mixed_graph.hpp"
#include "switchhom/perm_group.hpp"

namespace switchhom {

inline constexpr std::size_t kDefaultStateCap = 10'000'000;

// All colour/direction configurations reachable from a start graph by single
// switches, with predecessor data. The underlying graph is fixed; a state
// packs the per-edge colour and per-arc (colour, direction) assignment.
class ConfigurationSpace {
public:
    struct Move {
        int vertex = 0;
        int element_index = 0; // into the group's element list
    };

    std::size_t size() const { return packed_.size(); }
    const MixedGraph& base() const { return base_; }

    // Decode state k (k = 0 is the start graph itself).
    MixedGraph realize(std::size_t k) const;
    // Locate a configuration of the same underlying graph; nullopt if it is
    // not reachable.
    std::optional<std::size_t> find(const MixedGraph& configuration) const;
    // Switches that produce state k from the start, in application order.
    SwitchSequence path_from_start(std::size_t k, const SwitchGroup& g) const;

private:
    friend class OracleSearch;
    MixedGraph base_;
    std::vector<int> edge_bit_offset_;
    std::vector<int> arc_bit_offset_;
    int colour_bits_edge_ = 0;
    int colour_bits_arc_ = 0;
    std::vector<std::array<std::uint64_t, 2>> packed_;
    std::vector<std::int32_t> pred_;
    std::vector<Move> move_;
};

// BFS closure under all (vertex, element) switches. Deterministic: states are
// discovered in (frontier, vertex, element) order whether or not the parallel
// frontier expansion is used.
ConfigurationSpace reachable_configurations(const MixedGraph& g, const SwitchGroup& grp,
                                            std::size_t state_cap = kDefaultStateCap,
                                            bool parallel = true);

struct OracleVerdict {
    std::optional<YesCertificate> yes; // nullopt = no target is reachable
    std::size_t states_explored = 0;
};

// Ground-truth 2-colourability: search the reachable configurations for one
// admitting a plain homomorphism to a 2-vertex target, trying every
// monochromatic edge/arc target and both vertex mappings per component.
// Stops at the first hit unless explore_all is set.
OracleVerdict oracle_decide_2col(const MixedGraph& g, const SwitchGroup& grp,
                                 std::size_t state_cap = kDefaultStateCap,
                                 bool explore_all = false);

// Classes computed from the definition on the labelled cycle of the given
// even length: j is in the class of i when the nearly-(i, j) cycle reaches
// the monochromatic-i cycle. Group must act on edge colours (n = 0).
std::vector<std::vector<Colour>> oracle_classes(const SwitchGroup& grp, int cycle_length,
                                                std::size_t state_cap = kDefaultStateCap);

} // namespace switchhom
