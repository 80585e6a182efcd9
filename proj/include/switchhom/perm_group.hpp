#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "switchhom/errors.hpp"

namespace switchhom {

// Colour indices are 1-based throughout, matching the file formats.
using Colour = int;

// One switch: a permutation of the m edge colours, a permutation of the n arc
// colours, and per arc colour a flag saying whether arcs of that colour get
// reversed. Immutable once built.
class SwitchElement {
public:
    SwitchElement() = default;
    SwitchElement(std::vector<Colour> alpha_images, std::vector<Colour> beta_images,
                  std::vector<std::uint8_t> flips);

    static SwitchElement identity(int m, int n);

    int m() const { return static_cast<int>(alpha_.size()); }
    int n() const { return static_cast<int>(beta_.size()); }

    Colour alpha(Colour edge_colour) const { return alpha_[edge_colour - 1]; }
    Colour beta(Colour arc_colour) const { return beta_[arc_colour - 1]; }
    bool flips(Colour arc_colour) const { return flips_[arc_colour - 1] != 0; }

    const std::vector<Colour>& alpha_images() const { return alpha_; }
    const std::vector<Colour>& beta_images() const { return beta_; }
    const std::vector<std::uint8_t>& flip_bits() const { return flips_; }

    bool is_identity() const;

    friend bool operator==(const SwitchElement&, const SwitchElement&) = default;
    // Lexicographic on (alpha images, beta images, flips); gives the
    // deterministic element order used in files and certificates.
    friend auto operator<=>(const SwitchElement&, const SwitchElement&) = default;

private:
    std::vector<Colour> alpha_;
    std::vector<Colour> beta_;
    std::vector<std::uint8_t> flips_;
};

// Result of switching with `first` and then with `second` at the same vertex,
// as a single element: alpha/beta compose as functions and the flip for colour
// i picks up second's flip at the re-indexed colour first.beta(i).
SwitchElement compose(const SwitchElement& first, const SwitchElement& second);

SwitchElement inverse(const SwitchElement& p);

enum class Kind { Edge, Arc };

struct ColourOrbit {
    Kind kind = Kind::Edge;
    std::vector<Colour> members; // sorted ascending
};

// Finite group of switch elements, closed under compose() and inverse().
// Elements are kept sorted, so elements()[0] is always the identity.
class SwitchGroup {
public:
    SwitchGroup() = default;
    SwitchGroup(int m, int n, std::vector<SwitchElement> sorted_elements,
                std::vector<SwitchElement> generators);

    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<SwitchElement>& elements() const { return elements_; }
    const std::vector<SwitchElement>& generators() const { return generators_; }
    const SwitchElement& identity() const { return elements_.front(); }

    bool contains(const SwitchElement& p) const;
    // Index into elements(), or -1.
    int index_of(const SwitchElement& p) const;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<SwitchElement> elements_;
    std::vector<SwitchElement> generators_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// Smallest group containing the generators; errors out past element_cap.
SwitchGroup closure(int m, int n, std::vector<SwitchElement> generators,
                    std::size_t element_cap = kDefaultClosureCap);

ColourOrbit orbit(const SwitchGroup& g, Kind kind, Colour colour);

bool is_abelian(const SwitchGroup& g);

// For a group acting on arcs only (m = 0): the isomorphic group on 2n edge
// colours, where colour i of an arc crossing forward is index i and crossing
// backward is index n + i. Element images follow arc_element_to_edge_element.
SwitchGroup arc_group_to_edge_group(const SwitchGroup& g);

// Single-element version of the map above: requires p.m() == 0.
SwitchElement arc_element_to_edge_element(const SwitchElement& p);

// Inverse of arc_element_to_edge_element; ep must act on 2n edge colours and
// respect the paired structure (image of i and of n+i are paired), else throws.
SwitchElement edge_element_to_arc_element(const SwitchElement& ep, int n);

// The (m, 0) group of alpha parts, resp. the (0, n) group of (beta, flips)
// parts. Homomorphic images, so no re-closure is needed.
SwitchGroup project_edge_action(const SwitchGroup& g);
SwitchGroup project_arc_action(const SwitchGroup& g);

} // namespace switchhom
