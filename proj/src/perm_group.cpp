#include "switchhom/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace switchhom {

namespace {

bool is_bijection(const std::vector<Colour>& images) {
    std::vector<std::uint8_t> seen(images.size(), 0);
    for (Colour c : images) {
        if (c < 1 || c > static_cast<Colour>(images.size()) || seen[c - 1])
            return false;
        seen[c - 1] = 1;
    }
    return true;
}

void check_same_dims(const SwitchElement& a, const SwitchElement& b, const char* what) {
    if (a.m() != b.m() || a.n() != b.n())
        throw invalid_input_error(std::string(what) + ": element dimensions differ");
}

} // namespace

SwitchElement::SwitchElement(std::vector<Colour> alpha_images, std::vector<Colour> beta_images,
                             std::vector<std::uint8_t> flips)
    : alpha_(std::move(alpha_images)), beta_(std::move(beta_images)), flips_(std::move(flips)) {
    if (!is_bijection(alpha_))
        throw invalid_input_error("switch element: alpha is not a bijection on [1..m]");
    if (!is_bijection(beta_))
        throw invalid_input_error("switch element: beta is not a bijection on [1..n]");
    if (flips_.size() != beta_.size())
        throw invalid_input_error("switch element: flip list must have one entry per arc colour");
    for (auto& f : flips_)
        f = f ? 1 : 0;
}

SwitchElement SwitchElement::identity(int m, int n) {
    std::vector<Colour> a(m), b(n);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    return SwitchElement(std::move(a), std::move(b), std::vector<std::uint8_t>(n, 0));
}

bool SwitchElement::is_identity() const {
    for (int i = 1; i <= m(); ++i)
        if (alpha(i) != i)
            return false;
    for (int i = 1; i <= n(); ++i)
        if (beta(i) != i || flips(i))
            return false;
    return true;
}

SwitchElement compose(const SwitchElement& first, const SwitchElement& second) {
    check_same_dims(first, second, "compose");
    const int m = first.m(), n = first.n();
    std::vector<Colour> a(m), b(n);
    std::vector<std::uint8_t> f(n);
    for (Colour i = 1; i <= m; ++i)
        a[i - 1] = second.alpha(first.alpha(i));
    for (Colour i = 1; i <= n; ++i) {
        b[i - 1] = second.beta(first.beta(i));
        f[i - 1] = static_cast<std::uint8_t>(first.flips(i) ^ second.flips(first.beta(i)));
    }
    return SwitchElement(std::move(a), std::move(b), std::move(f));
}

SwitchElement inverse(const SwitchElement& p) {
    const int m = p.m(), n = p.n();
    std::vector<Colour> a(m), b(n);
    std::vector<std::uint8_t> f(n);
    for (Colour i = 1; i <= m; ++i)
        a[p.alpha(i) - 1] = i;
    for (Colour i = 1; i <= n; ++i)
        b[p.beta(i) - 1] = i;
    // compose(p, q) must clear every flip: q.flips[p.beta(i)] = p.flips[i].
    for (Colour i = 1; i <= n; ++i)
        f[p.beta(i) - 1] = static_cast<std::uint8_t>(p.flips(i));
    return SwitchElement(std::move(a), std::move(b), std::move(f));
}

SwitchGroup::SwitchGroup(int m, int n, std::vector<SwitchElement> sorted_elements,
                         std::vector<SwitchElement> generators)
    : m_(m), n_(n), elements_(std::move(sorted_elements)), generators_(std::move(generators)) {}

bool SwitchGroup::contains(const SwitchElement& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

int SwitchGroup::index_of(const SwitchElement& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
        return -1;
    return static_cast<int>(it - elements_.begin());
}

SwitchGroup closure(int m, int n, std::vector<SwitchElement> generators, std::size_t element_cap) {
    for (const auto& g : generators)
        if (g.m() != m || g.n() != n)
            throw invalid_input_error("closure: generator dimensions do not match (m, n)");

    std::set<SwitchElement> elements;
    std::deque<SwitchElement> queue;
    auto push = [&](const SwitchElement& e) {
        if (elements.insert(e).second) {
            if (elements.size() > element_cap)
                throw resource_limit_error("closure: element cap exceeded (" +
                                           std::to_string(element_cap) + ")");
            queue.push_back(e);
        }
    };

    push(SwitchElement::identity(m, n));
    for (const auto& g : generators)
        push(g);

    // Every element of a finite group has finite order, so closing under
    // products with the generators already yields all inverses.
    while (!queue.empty()) {
        SwitchElement x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            push(compose(x, g));
            push(compose(g, x));
        }
    }

    std::vector<SwitchElement> sorted(elements.begin(), elements.end());
    std::vector<SwitchElement> gens;
    for (auto& g : generators)
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
            gens.push_back(std::move(g));
    return SwitchGroup(m, n, std::move(sorted), std::move(gens));
}

ColourOrbit orbit(const SwitchGroup& g, Kind kind, Colour colour) {
    const int range = kind == Kind::Edge ? g.m() : g.n();
    if (colour < 1 || colour > range)
        throw invalid_input_error("orbit: colour " + std::to_string(colour) + " out of range [1.." +
                                  std::to_string(range) + "]");
    std::set<Colour> members;
    for (const auto& e : g.elements())
        members.insert(kind == Kind::Edge ? e.alpha(colour) : e.beta(colour));
    return ColourOrbit{kind, std::vector<Colour>(members.begin(), members.end())};
}

bool is_abelian(const SwitchGroup& g) {
    const auto& es = g.elements();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (compose(es[i], es[j]) != compose(es[j], es[i]))
                return false;
    return true;
}

SwitchElement arc_element_to_edge_element(const SwitchElement& p) {
    if (p.m() != 0)
        throw invalid_input_error("arc_element_to_edge_element: element must act on arcs only");
    const int n = p.n();
    std::vector<Colour> a(2 * n);
    for (Colour i = 1; i <= n; ++i) {
        if (p.flips(i)) {
            a[i - 1] = n + p.beta(i);
            a[n + i - 1] = p.beta(i);
        } else {
            a[i - 1] = p.beta(i);
            a[n + i - 1] = n + p.beta(i);
        }
    }
    return SwitchElement(std::move(a), {}, {});
}

SwitchElement edge_element_to_arc_element(const SwitchElement& ep, int n) {
    if (ep.n() != 0 || ep.m() != 2 * n)
        throw invalid_input_error("edge_element_to_arc_element: element must act on 2n edge colours");
    std::vector<Colour> b(n);
    std::vector<std::uint8_t> f(n);
    for (Colour i = 1; i <= n; ++i) {
        Colour forward = ep.alpha(i);
        Colour backward = ep.alpha(n + i);
        if (forward <= n) {
            b[i - 1] = forward;
            f[i - 1] = 0;
            if (backward != n + forward)
                throw invalid_input_error("edge_element_to_arc_element: unpaired image");
        } else {
            b[i - 1] = forward - n;
            f[i - 1] = 1;
            if (backward != forward - n)
                throw invalid_input_error("edge_element_to_arc_element: unpaired image");
        }
    }
    return SwitchElement({}, std::move(b), std::move(f));
}

SwitchGroup arc_group_to_edge_group(const SwitchGroup& g) {
    if (g.m() != 0)
        throw invalid_input_error("arc_group_to_edge_group: group must act on arcs only (m = 0)");
    std::vector<SwitchElement> elements;
    elements.reserve(g.order());
    for (const auto& e : g.elements())
        elements.push_back(arc_element_to_edge_element(e));
    std::sort(elements.begin(), elements.end());
    std::vector<SwitchElement> gens;
    for (const auto& e : g.generators()) {
        auto image = arc_element_to_edge_element(e);
        if (std::find(gens.begin(), gens.end(), image) == gens.end())
            gens.push_back(std::move(image));
    }
    return SwitchGroup(2 * g.n(), 0, std::move(elements), std::move(gens));
}

namespace {

SwitchGroup project(const SwitchGroup& g, bool keep_edge_part) {
    std::set<SwitchElement> elements;
    for (const auto& e : g.elements())
        elements.insert(keep_edge_part ? SwitchElement(e.alpha_images(), {}, {})
                                       : SwitchElement({}, e.beta_images(), e.flip_bits()));
    std::vector<SwitchElement> gens;
    for (const auto& e : g.generators()) {
        auto image = keep_edge_part ? SwitchElement(e.alpha_images(), {}, {})
                                    : SwitchElement({}, e.beta_images(), e.flip_bits());
        if (std::find(gens.begin(), gens.end(), image) == gens.end())
            gens.push_back(std::move(image));
    }
    return SwitchGroup(keep_edge_part ? g.m() : 0, keep_edge_part ? 0 : g.n(),
                       std::vector<SwitchElement>(elements.begin(), elements.end()),
                       std::move(gens));
}

} // namespace

SwitchGroup project_edge_action(const SwitchGroup& g) { return project(g, true); }

SwitchGroup project_arc_action(const SwitchGroup& g) { return project(g, false); }

} // namespace switchhom
