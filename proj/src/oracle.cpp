#include "switchhom/oracle.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace switchhom {

namespace {

struct State128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend bool operator==(const State128&, const State128&) = default;
    friend bool operator<(const State128& a, const State128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_state(const State128& s) {
    return mix64(s.lo) ^ mix64(s.hi + 0x165667b19e3779f9ull);
}

inline std::uint64_t get_bits(const State128& s, int offset, int width) {
    std::uint64_t mask = width == 64 ? ~0ull : ((1ull << width) - 1);
    if (offset + width <= 64)
        return (s.lo >> offset) & mask;
    if (offset >= 64)
        return (s.hi >> (offset - 64)) & mask;
    int low_bits = 64 - offset;
    return ((s.lo >> offset) | (s.hi << low_bits)) & mask;
}

inline void set_bits(State128& s, int offset, int width, std::uint64_t value) {
    std::uint64_t mask = width == 64 ? ~0ull : ((1ull << width) - 1);
    value &= mask;
    if (offset + width <= 64) {
        s.lo = (s.lo & ~(mask << offset)) | (value << offset);
    } else if (offset >= 64) {
        int o = offset - 64;
        s.hi = (s.hi & ~(mask << o)) | (value << o);
    } else {
        int low_bits = 64 - offset;
        std::uint64_t low_mask = mask >> (width - low_bits);
        s.lo = (s.lo & ~(low_mask << offset)) | ((value & low_mask) << offset);
        std::uint64_t hi_mask = mask >> low_bits;
        s.hi = (s.hi & ~hi_mask) | (value >> low_bits);
    }
}

// Open-addressing map from packed states to discovery indices.
class StateMap {
public:
    explicit StateMap(std::size_t expected) { rehash(round_up(expected * 2 + 16)); }

    std::int32_t find(const State128& key) const {
        std::size_t at = hash_state(key) & mask_;
        while (vals_[at] >= 0) {
            if (keys_[at] == key)
                return vals_[at];
            at = (at + 1) & mask_;
        }
        return -1;
    }

    // Inserts unless present; returns true when inserted.
    bool insert_if_absent(const State128& key, std::int32_t value) {
        if ((count_ + 1) * 10 > keys_.size() * 7)
            rehash(keys_.size() * 2);
        std::size_t at = hash_state(key) & mask_;
        while (vals_[at] >= 0) {
            if (keys_[at] == key)
                return false;
            at = (at + 1) & mask_;
        }
        keys_[at] = key;
        vals_[at] = value;
        ++count_;
        return true;
    }

private:
    static std::size_t round_up(std::size_t x) { return std::bit_ceil(std::max<std::size_t>(x, 16)); }

    void rehash(std::size_t capacity) {
        std::vector<State128> old_keys = std::move(keys_);
        std::vector<std::int32_t> old_vals = std::move(vals_);
        keys_.assign(capacity, State128{});
        vals_.assign(capacity, -1);
        mask_ = capacity - 1;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_vals[i] < 0)
                continue;
            std::size_t at = hash_state(old_keys[i]) & mask_;
            while (vals_[at] >= 0)
                at = (at + 1) & mask_;
            keys_[at] = old_keys[i];
            vals_[at] = old_vals[i];
        }
    }

    std::vector<State128> keys_;
    std::vector<std::int32_t> vals_;
    std::size_t mask_ = 0;
    std::size_t count_ = 0;
};

struct Layout {
    int edge_bits = 0;
    int arc_bits = 0; // colour bits + 1 direction bit
    std::vector<int> edge_offset;
    std::vector<int> arc_offset;

    static int bits_for(int colours) {
        return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(colours - 1, 1)))));
    }

    explicit Layout(const MixedGraph& g) {
        edge_bits = bits_for(g.m);
        arc_bits = bits_for(g.n) + 1;
        int at = 0;
        edge_offset.reserve(g.edges.size());
        for (std::size_t i = 0; i < g.edges.size(); ++i, at += edge_bits)
            edge_offset.push_back(at);
        arc_offset.reserve(g.arcs.size());
        for (std::size_t i = 0; i < g.arcs.size(); ++i, at += arc_bits)
            arc_offset.push_back(at);
        if (at > 128)
            throw resource_limit_error("state encoding needs " + std::to_string(at) +
                                       " bits; the packed-state oracle supports at most 128");
    }

    State128 pack_start(const MixedGraph& g) const {
        State128 s;
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            set_bits(s, edge_offset[i], edge_bits, static_cast<std::uint64_t>(g.edges[i].colour - 1));
        for (std::size_t i = 0; i < g.arcs.size(); ++i)
            set_bits(s, arc_offset[i], arc_bits,
                     static_cast<std::uint64_t>(g.arcs[i].colour - 1) << 1);
        return s;
    }

    Colour edge_colour(const State128& s, int i) const {
        return static_cast<Colour>(get_bits(s, edge_offset[i], edge_bits)) + 1;
    }
    Colour arc_colour(const State128& s, int i) const {
        return static_cast<Colour>(get_bits(s, arc_offset[i], arc_bits) >> 1) + 1;
    }
    bool arc_reversed(const State128& s, int i) const {
        return (get_bits(s, arc_offset[i], arc_bits) & 1) != 0;
    }
};

// Switch state `s` at vertex v (incident incidences given) with element e.
State128 switched(const State128& s, const Layout& layout,
                  std::span<const Adjacency::Entry> incident, const SwitchElement& e) {
    State128 out = s;
    for (const auto& entry : incident) {
        if (entry.inc.kind == Kind::Edge) {
            int i = entry.inc.index;
            Colour c = layout.edge_colour(out, i);
            set_bits(out, layout.edge_offset[i], layout.edge_bits,
                     static_cast<std::uint64_t>(e.alpha(c) - 1));
        } else {
            int i = entry.inc.index;
            std::uint64_t field = get_bits(out, layout.arc_offset[i], layout.arc_bits);
            Colour c = static_cast<Colour>(field >> 1) + 1;
            std::uint64_t rev = (field & 1) ^ static_cast<std::uint64_t>(e.flips(c) ? 1 : 0);
            set_bits(out, layout.arc_offset[i], layout.arc_bits,
                     (static_cast<std::uint64_t>(e.beta(c) - 1) << 1) | rev);
        }
    }
    return out;
}

struct Candidate {
    State128 state;
    std::int32_t pred;
    ConfigurationSpace::Move move;
};

// Deterministic BFS: discovery follows (frontier position, vertex, element)
// order. The parallel path expands the frontier in fixed-size blocks and
// merges candidate lists in generation order, which reproduces the serial
// discovery sequence exactly.
class Search {
public:
    Search(const MixedGraph& g, const SwitchGroup& grp)
        : base_(g), grp_(grp), layout_(g), adj_(g) {
        if (grp.m() != g.m || grp.n() != g.n)
            throw invalid_input_error("oracle: group dimensions do not match the graph");
    }

    // visit returns true to stop the search.
    template <typename Visit>
    void run(std::size_t cap, bool parallel, Visit visit) {
        State128 start = layout_.pack_start(base_);
        map_.insert_if_absent(start, 0);
        states_.push_back(start);
        pred_.push_back(0);
        move_.push_back({0, -1});
        if (visit(0))
            return;
        if (parallel)
            run_parallel(cap, visit);
        else
            run_serial(cap, visit);
    }

    const std::vector<State128>& states() const { return states_; }
    const std::vector<std::int32_t>& pred() const { return pred_; }
    const std::vector<ConfigurationSpace::Move>& moves() const { return move_; }
    const Layout& layout() const { return layout_; }

    SwitchSequence path_to(std::size_t k) const {
        SwitchSequence seq;
        for (std::size_t at = k; at != 0; at = pred_[at])
            seq.steps.push_back(SwitchStep{move_[at].vertex, grp_.elements()[move_[at].element_index]});
        std::reverse(seq.steps.begin(), seq.steps.end());
        return seq;
    }

private:
    void check_cap(std::size_t cap) const {
        if (states_.size() >= cap)
            throw resource_limit_error("oracle: state cap exceeded (" + std::to_string(cap) + ")");
    }

    template <typename Visit>
    void run_serial(std::size_t cap, Visit visit) {
        const auto& elements = grp_.elements();
        for (std::size_t head = 0; head < states_.size(); ++head) {
            State128 current = states_[head];
            for (int v = 1; v <= base_.vertex_count; ++v) {
                auto incident = adj_.at(v);
                if (incident.empty())
                    continue;
                for (int ei = 1; ei < static_cast<int>(elements.size()); ++ei) {
                    State128 next = switched(current, layout_, incident, elements[ei]);
                    if (!map_.insert_if_absent(next, static_cast<std::int32_t>(states_.size())))
                        continue;
                    check_cap(cap);
                    states_.push_back(next);
                    pred_.push_back(static_cast<std::int32_t>(head));
                    move_.push_back({v, ei});
                    if (visit(states_.size() - 1))
                        return;
                }
            }
        }
    }

    template <typename Visit>
    void run_parallel(std::size_t cap, Visit visit) {
        const auto& elements = grp_.elements();
        constexpr std::size_t kBlock = 4096;
        std::size_t head = 0;
        while (head < states_.size()) {
            std::size_t block_end = std::min(states_.size(), head + kBlock);
            const std::int64_t block = static_cast<std::int64_t>(block_end - head);
            std::vector<std::vector<Candidate>> buffers(block);
#pragma omp parallel for schedule(static)
            for (std::int64_t b = 0; b < block; ++b) {
                std::size_t at = head + static_cast<std::size_t>(b);
                State128 current = states_[at];
                auto& buffer = buffers[b];
                for (int v = 1; v <= base_.vertex_count; ++v) {
                    auto incident = adj_.at(v);
                    if (incident.empty())
                        continue;
                    for (int ei = 1; ei < static_cast<int>(elements.size()); ++ei) {
                        State128 next = switched(current, layout_, incident, elements[ei]);
                        if (map_.find(next) < 0)
                            buffer.push_back(
                                Candidate{next, static_cast<std::int32_t>(at), {v, ei}});
                    }
                }
            }
            for (auto& buffer : buffers)
                for (const auto& cand : buffer) {
                    if (!map_.insert_if_absent(cand.state, static_cast<std::int32_t>(states_.size())))
                        continue;
                    check_cap(cap);
                    states_.push_back(cand.state);
                    pred_.push_back(cand.pred);
                    move_.push_back(cand.move);
                    if (visit(states_.size() - 1))
                        return;
                }
            head = block_end;
        }
    }

    const MixedGraph& base_;
    const SwitchGroup& grp_;
    Layout layout_;
    Adjacency adj_;
    StateMap map_{64};
    std::vector<State128> states_;
    std::vector<std::int32_t> pred_;
    std::vector<ConfigurationSpace::Move> move_;
};

} // namespace

class OracleSearch {
public:
    static ConfigurationSpace build(const MixedGraph& g, const SwitchGroup& grp,
                                    std::size_t state_cap, bool parallel) {
        Search search(g, grp);
        search.run(state_cap, parallel, [](std::size_t) { return false; });
        ConfigurationSpace space;
        space.base_ = g;
        Layout layout(g);
        space.edge_bit_offset_ = layout.edge_offset;
        space.arc_bit_offset_ = layout.arc_offset;
        space.colour_bits_edge_ = layout.edge_bits;
        space.colour_bits_arc_ = layout.arc_bits;
        space.packed_.reserve(search.states().size());
        for (const auto& s : search.states())
            space.packed_.push_back({s.lo, s.hi});
        space.pred_ = search.pred();
        space.move_ = search.moves();
        return space;
    }
};

MixedGraph ConfigurationSpace::realize(std::size_t k) const {
    State128 s{packed_[k][0], packed_[k][1]};
    MixedGraph out = base_;
    for (std::size_t i = 0; i < out.edges.size(); ++i)
        out.edges[i].colour =
            static_cast<Colour>(get_bits(s, edge_bit_offset_[i], colour_bits_edge_)) + 1;
    for (std::size_t i = 0; i < out.arcs.size(); ++i) {
        std::uint64_t field = get_bits(s, arc_bit_offset_[i], colour_bits_arc_);
        out.arcs[i].colour = static_cast<Colour>(field >> 1) + 1;
        if (field & 1)
            std::swap(out.arcs[i].tail, out.arcs[i].head);
    }
    return out;
}

std::optional<std::size_t> ConfigurationSpace::find(const MixedGraph& configuration) const {
    if (configuration.vertex_count != base_.vertex_count ||
        configuration.edges.size() != base_.edges.size() ||
        configuration.arcs.size() != base_.arcs.size())
        throw invalid_input_error("find: configuration has a different underlying graph");
    State128 key;
    for (std::size_t i = 0; i < base_.edges.size(); ++i) {
        const auto& have = configuration.edges[i];
        const auto& want = base_.edges[i];
        if (std::minmax(have.u, have.v) != std::minmax(want.u, want.v))
            throw invalid_input_error("find: edge endpoints differ from the base graph");
        set_bits(key, edge_bit_offset_[i], colour_bits_edge_,
                 static_cast<std::uint64_t>(have.colour - 1));
    }
    for (std::size_t i = 0; i < base_.arcs.size(); ++i) {
        const auto& have = configuration.arcs[i];
        const auto& want = base_.arcs[i];
        bool forward = have.tail == want.tail && have.head == want.head;
        bool backward = have.tail == want.head && have.head == want.tail;
        if (!forward && !backward)
            throw invalid_input_error("find: arc endpoints differ from the base graph");
        set_bits(key, arc_bit_offset_[i], colour_bits_arc_,
                 (static_cast<std::uint64_t>(have.colour - 1) << 1) | (backward ? 1 : 0));
    }
    for (std::size_t k = 0; k < packed_.size(); ++k)
        if (packed_[k][0] == key.lo && packed_[k][1] == key.hi)
            return k;
    return std::nullopt;
}

SwitchSequence ConfigurationSpace::path_from_start(std::size_t k, const SwitchGroup& g) const {
    SwitchSequence seq;
    for (std::size_t at = k; at != 0; at = static_cast<std::size_t>(pred_[at]))
        seq.steps.push_back(SwitchStep{move_[at].vertex, g.elements()[move_[at].element_index]});
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
}

ConfigurationSpace reachable_configurations(const MixedGraph& g, const SwitchGroup& grp,
                                            std::size_t state_cap, bool parallel) {
    return OracleSearch::build(g, grp, state_cap, parallel);
}

OracleVerdict oracle_decide_2col(const MixedGraph& g, const SwitchGroup& grp,
                                 std::size_t state_cap, bool explore_all) {
    if (grp.m() != g.m || grp.n() != g.n)
        throw invalid_input_error("oracle: group dimensions do not match the graph");

    OracleVerdict verdict;
    if (g.edges.empty() && g.arcs.empty()) {
        verdict.yes = YesCertificate{TargetKind::K1, 0, true, {}, {}};
        return verdict;
    }
    // A 2-vertex target is loop-free with a single incidence: it cannot host
    // both an edge and an arc image, and any homomorphism onto it 2-colours
    // the underlying graph. Both facts are switch-invariant.
    if (!g.edges.empty() && !g.arcs.empty())
        return verdict;
    SpanningForest forest = spanning_forest(g);
    if (!std::holds_alternative<Bipartition>(bipartition(g)))
        return verdict;

    std::vector<std::uint8_t> side(g.vertex_count + 1, 0);
    for (int v = 1; v <= g.vertex_count; ++v)
        side[v] = static_cast<std::uint8_t>(forest.depth[v] & 1);

    Layout layout(g);
    const int components = forest.component_count();
    std::vector<std::uint8_t> tail_side(components);

    // For the current state: all edges one colour (for K2 targets), or all
    // arcs one colour with uniform crossing per component (for T2 targets).
    auto admits_target = [&](const State128& s) -> bool {
        if (!g.edges.empty()) {
            Colour want = layout.edge_colour(s, 0);
            for (std::size_t i = 1; i < g.edges.size(); ++i)
                if (layout.edge_colour(s, i) != want)
                    return false;
            return true;
        }
        Colour want = layout.arc_colour(s, 0);
        std::vector<std::int8_t> dir(components, -1);
        for (std::size_t i = 0; i < g.arcs.size(); ++i) {
            if (layout.arc_colour(s, i) != want)
                return false;
            int tail = layout.arc_reversed(s, i) ? g.arcs[i].head : g.arcs[i].tail;
            std::int8_t d = static_cast<std::int8_t>(side[tail]);
            int comp = forest.component[tail];
            if (dir[comp] < 0)
                dir[comp] = d;
            else if (dir[comp] != d)
                return false;
        }
        for (int c = 0; c < components; ++c)
            tail_side[c] = dir[c] < 0 ? side[forest.roots[c]] : static_cast<std::uint8_t>(dir[c]);
        return true;
    };

    Search search(g, grp);
    std::optional<std::size_t> hit;
    search.run(state_cap, false, [&](std::size_t k) {
        if (admits_target(search.states()[k])) {
            if (!hit)
                hit = k;
            return !explore_all;
        }
        return false;
    });
    verdict.states_explored = search.states().size();
    if (!hit)
        return verdict;

    const State128& goal = search.states()[*hit];
    YesCertificate yes;
    yes.sequence = search.path_to(*hit);
    yes.side.assign(g.vertex_count + 1, 0);
    if (!g.edges.empty()) {
        yes.target = TargetKind::K2;
        yes.colour = layout.edge_colour(goal, 0);
        for (int v = 1; v <= g.vertex_count; ++v)
            yes.side[v] = side[v];
    } else {
        yes.target = TargetKind::T2;
        yes.colour = layout.arc_colour(goal, 0);
        admits_target(goal); // refresh tail_side
        for (int v = 1; v <= g.vertex_count; ++v)
            yes.side[v] = side[v] == tail_side[forest.component[v]] ? 0 : 1;
    }
    verdict.yes = std::move(yes);
    return verdict;
}

std::vector<std::vector<Colour>> oracle_classes(const SwitchGroup& grp, int cycle_length,
                                                std::size_t state_cap) {
    if (grp.n() != 0)
        throw invalid_input_error("oracle_classes needs an edge-colour group (n = 0)");
    if (cycle_length < 4 || cycle_length % 2 != 0)
        throw invalid_input_error("oracle_classes: cycle length must be even and at least 4");

    std::vector<std::vector<Colour>> classes(grp.m());
    for (Colour i = 1; i <= grp.m(); ++i) {
        MixedGraph cycle(grp.m(), 0, cycle_length);
        for (int v = 1; v < cycle_length; ++v)
            cycle.add_edge(v, v + 1, i);
        cycle.add_edge(1, cycle_length, i); // the distinguished edge
        ConfigurationSpace space = reachable_configurations(cycle, grp, state_cap);
        for (Colour j = 1; j <= grp.m(); ++j) {
            MixedGraph nearly = cycle;
            nearly.edges.back().colour = j;
            if (space.find(nearly))
                classes[i - 1].push_back(j);
        }
    }
    return classes;
}

} // namespace switchhom
