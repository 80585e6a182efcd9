#include "switchhom/substitution.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace switchhom {

namespace {

// Packed edge colourings of a labelled cycle: one field per edge, colour - 1.
struct CycleCodec {
    int length = 0;
    int width = 0;

    CycleCodec(int m, int len) : length(len) {
        if (m < 1 || m > 256)
            throw invalid_input_error("cycle state packing supports 1..256 colours");
        width = m <= 16 ? 4 : 8;
        if (length * width > 64)
            throw resource_limit_error("cycle of length " + std::to_string(length) +
                                       " does not fit the 64-bit state encoding");
    }

    std::uint64_t pack(const std::vector<Colour>& colours) const {
        std::uint64_t key = 0;
        for (int k = length - 1; k >= 0; --k)
            key = (key << width) | static_cast<std::uint64_t>(colours[k] - 1);
        return key;
    }

    Colour field(std::uint64_t key, int k) const {
        return static_cast<Colour>((key >> (k * width)) & ((1u << width) - 1)) + 1;
    }

    std::uint64_t with_field(std::uint64_t key, int k, Colour c) const {
        std::uint64_t mask = static_cast<std::uint64_t>((1u << width) - 1) << (k * width);
        return (key & ~mask) | (static_cast<std::uint64_t>(c - 1) << (k * width));
    }

    std::vector<Colour> unpack(std::uint64_t key) const {
        std::vector<Colour> colours(length);
        for (int k = 0; k < length; ++k)
            colours[k] = field(key, k);
        return colours;
    }
};

struct CycleSpace {
    CycleCodec codec;
    std::vector<std::uint64_t> states;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<int> pred;
    std::vector<std::pair<int, int>> move; // (cycle vertex, element index)
    std::vector<int> depth;
    int eccentricity = 0;
};

// BFS from `start` over single switches on the labelled cycle. Vertex k is
// incident to edges k-1 (mod L) and k. Identity moves are skipped.
CycleSpace cycle_component(const SwitchGroup& g, const std::vector<Colour>& start,
                           std::size_t state_cap) {
    if (g.n() != 0)
        throw invalid_input_error("cycle reconfiguration needs an edge-colour group (n = 0)");
    const int len = static_cast<int>(start.size());
    CycleSpace space{CycleCodec(g.m(), len), {}, {}, {}, {}, {}, 0};
    for (Colour c : start)
        if (c < 1 || c > g.m())
            throw invalid_input_error("cycle start colour out of range");

    auto push = [&](std::uint64_t key, int pred, std::pair<int, int> mv, int depth) {
        auto [it, fresh] = space.index.emplace(key, static_cast<int>(space.states.size()));
        if (!fresh)
            return;
        if (space.states.size() >= state_cap)
            throw resource_limit_error("cycle reconfiguration state cap exceeded");
        space.states.push_back(key);
        space.pred.push_back(pred);
        space.move.push_back(mv);
        space.depth.push_back(depth);
        space.eccentricity = std::max(space.eccentricity, depth);
    };

    push(space.codec.pack(start), 0, {-1, -1}, 0);
    const auto& elements = g.elements();
    for (std::size_t head = 0; head < space.states.size(); ++head) {
        std::uint64_t key = space.states[head];
        int d = space.depth[head] + 1;
        for (int vertex = 0; vertex < len; ++vertex) {
            int e0 = (vertex + len - 1) % len;
            int e1 = vertex;
            Colour c0 = space.codec.field(key, e0);
            Colour c1 = space.codec.field(key, e1);
            for (int ei = 1; ei < static_cast<int>(elements.size()); ++ei) {
                const auto& el = elements[ei];
                std::uint64_t next = space.codec.with_field(key, e0, el.alpha(c0));
                next = space.codec.with_field(next, e1, el.alpha(c1));
                push(next, static_cast<int>(head), {vertex, ei}, d);
            }
        }
    }
    return space;
}

std::vector<std::vector<Colour>> classes_from_space(const SwitchGroup& g, int length,
                                                    std::size_t state_cap,
                                                    std::vector<CycleSpace>* keep = nullptr) {
    std::vector<std::vector<Colour>> members(g.m());
    for (Colour i = 1; i <= g.m(); ++i) {
        std::vector<Colour> start(length, i);
        CycleSpace space = cycle_component(g, start, state_cap);
        for (Colour j = 1; j <= g.m(); ++j) {
            std::vector<Colour> nearly(length, i);
            nearly[length - 1] = j;
            if (space.index.count(space.codec.pack(nearly)))
                members[i - 1].push_back(j);
        }
        if (keep)
            keep->push_back(std::move(space));
    }
    return members;
}

} // namespace

bool ReconfigurationComponent::contains(const C4State& s) const {
    CycleCodec codec(m_, 4);
    return index_.count(codec.pack({s.colours.begin(), s.colours.end()})) > 0;
}

std::vector<C4Move> ReconfigurationComponent::path_to(const C4State& s) const {
    CycleCodec codec(m_, 4);
    auto it = index_.find(codec.pack({s.colours.begin(), s.colours.end()}));
    if (it == index_.end())
        throw invalid_input_error("path_to: state not in this component");
    std::vector<C4Move> path;
    for (int at = it->second; at != 0; at = pred_[at])
        path.push_back(move_[at]);
    std::reverse(path.begin(), path.end());
    return path;
}

ReconfigurationComponent reconfiguration_component(const SwitchGroup& g, const C4State& start) {
    CycleSpace space =
        cycle_component(g, {start.colours.begin(), start.colours.end()}, std::size_t(-1));
    ReconfigurationComponent comp;
    comp.m_ = g.m();
    comp.eccentricity_ = space.eccentricity;
    comp.index_ = std::move(space.index);
    comp.states_.reserve(space.states.size());
    comp.pred_ = std::move(space.pred);
    comp.move_.reserve(space.states.size());
    for (std::size_t k = 0; k < space.states.size(); ++k) {
        auto colours = space.codec.unpack(space.states[k]);
        comp.states_.push_back(C4State{{colours[0], colours[1], colours[2], colours[3]}});
        auto [vertex, ei] = space.move[k];
        comp.move_.push_back(C4Move{vertex, ei < 0 ? SwitchElement::identity(g.m(), 0)
                                                   : g.elements()[ei]});
    }
    return comp;
}

bool SubstitutionClasses::in_class(Colour i, Colour j) const {
    return witnesses.count({i, j}) > 0;
}

const std::vector<C4WitnessStep>& SubstitutionClasses::witness(Colour i, Colour j) const {
    auto it = witnesses.find({i, j});
    if (it == witnesses.end())
        throw invalid_input_error("no witness: colour " + std::to_string(j) +
                                  " is not in the class of " + std::to_string(i));
    return it->second;
}

SubstitutionClasses substitution_classes(const SwitchGroup& g) {
    if (g.n() != 0)
        throw invalid_input_error("substitution_classes needs an edge-colour group (n = 0)");
    SubstitutionClasses out;
    out.m = g.m();
    out.members.resize(g.m());
    for (Colour i = 1; i <= g.m(); ++i) {
        ReconfigurationComponent comp = reconfiguration_component(g, C4State::monochromatic(i));
        out.c_gamma = std::max(out.c_gamma, comp.start_eccentricity());
        for (Colour j = 1; j <= g.m(); ++j) {
            C4State nearly = C4State::nearly(i, j);
            if (!comp.contains(nearly))
                continue;
            out.members[i - 1].push_back(j);
            // The BFS path runs mono -> nearly; the witness is its inverse.
            std::vector<C4WitnessStep> steps;
            auto path = comp.path_to(nearly);
            for (auto it = path.rbegin(); it != path.rend(); ++it)
                steps.push_back(C4WitnessStep{it->vertex, inverse(it->element)});
            out.witnesses.emplace(std::make_pair(i, j), std::move(steps));
        }
    }
    return out;
}

const SubstitutionClasses& substitution_classes_cached(const SwitchGroup& g) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<SubstitutionClasses>> cache;

    std::ostringstream key;
    key << g.m() << '|' << g.n();
    for (const auto& e : g.elements()) {
        for (Colour c : e.alpha_images())
            key << ' ' << c;
        key << ';';
    }

    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[key.str()];
    if (!slot)
        slot = std::make_unique<SubstitutionClasses>(substitution_classes(g));
    return *slot;
}

ClassStabilityReport check_class_stability(const SwitchGroup& g, const std::vector<int>& lengths,
                                           std::size_t state_cap) {
    SubstitutionClasses base = substitution_classes(g);
    ClassStabilityReport report;
    report.lengths = lengths;
    for (int len : lengths) {
        if (len < 4 || len % 2 != 0)
            throw invalid_input_error("class stability lengths must be even and at least 4");
        double states = 1;
        for (int k = 0; k < len; ++k) {
            states *= g.m();
            if (states > static_cast<double>(state_cap))
                throw resource_limit_error("class stability: m^length exceeds the state cap");
        }
        auto classes = classes_from_space(g, len, state_cap);
        bool equal = classes == base.members;
        report.classes_by_length.push_back(std::move(classes));
        report.equals_c4.push_back(equal);
        report.all_equal = report.all_equal && equal;
    }
    return report;
}

} // namespace switchhom
