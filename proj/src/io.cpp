#include "switchhom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace switchhom {

namespace {

struct Line {
    std::string text;
    int number = 0;
};

// Strips comments and blank lines, keeps 1-based numbering.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream probe(raw);
        std::string token;
        if (probe >> token)
            lines.push_back(Line{raw, number});
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream stream(text);
    std::vector<std::string> tokens;
    std::string t;
    while (stream >> t)
        tokens.push_back(t);
    return tokens;
}

int parse_int(const std::string& token, int line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + token + "'", line);
    }
}

// The `<alpha> | <beta> | <flips>` tail shared by group and sequence lines.
SwitchElement parse_element_sections(const std::string& tail, int line) {
    std::vector<std::string> sections;
    std::string current;
    for (char c : tail) {
        if (c == '|') {
            sections.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    sections.push_back(current);
    if (sections.size() != 3)
        throw parse_error("expected '<alpha> | <beta> | <flips>'", line);

    auto images = [&](const std::string& section) {
        std::vector<Colour> out;
        auto toks = tokens_of(section);
        if (toks.size() == 1 && toks[0] == ".")
            return out;
        for (const auto& t : toks)
            out.push_back(parse_int(t, line));
        return out;
    };
    std::vector<Colour> alpha = images(sections[0]);
    std::vector<Colour> beta = images(sections[1]);

    std::vector<std::uint8_t> flips;
    auto flip_tokens = tokens_of(sections[2]);
    if (!(flip_tokens.size() == 1 && flip_tokens[0] == ".")) {
        if (flip_tokens.size() != 1)
            throw parse_error("flip section must be one string of '+'/'-'", line);
        for (char c : flip_tokens[0]) {
            if (c != '+' && c != '-')
                throw parse_error(std::string("bad flip character '") + c + "'", line);
            flips.push_back(c == '-' ? 1 : 0);
        }
    }
    try {
        return SwitchElement(std::move(alpha), std::move(beta), std::move(flips));
    } catch (const invalid_input_error& e) {
        throw parse_error(e.what(), line);
    }
}

void write_element_sections(std::ostream& out, const SwitchElement& e) {
    if (e.m() == 0) {
        out << ".";
    } else {
        for (Colour c = 1; c <= e.m(); ++c)
            out << (c > 1 ? " " : "") << e.alpha(c);
    }
    out << " | ";
    if (e.n() == 0) {
        out << ".";
    } else {
        for (Colour c = 1; c <= e.n(); ++c)
            out << (c > 1 ? " " : "") << e.beta(c);
    }
    out << " | ";
    if (e.n() == 0) {
        out << ".";
    } else {
        for (Colour c = 1; c <= e.n(); ++c)
            out << (e.flips(c) ? '-' : '+');
    }
}

IncidenceRef parse_incidence_token(const std::string& token, int line) {
    if (token.size() < 2 || (token[0] != 'e' && token[0] != 'a'))
        throw parse_error("expected e<id> or a<id>, got '" + token + "'", line);
    int id = parse_int(token.substr(1), line);
    if (id < 1)
        throw parse_error("incidence ids are 1-based", line);
    return IncidenceRef{token[0] == 'e' ? Kind::Edge : Kind::Arc, id - 1};
}

std::string incidence_token(IncidenceRef inc) {
    return (inc.kind == Kind::Edge ? "e" : "a") + std::to_string(inc.index + 1);
}

} // namespace

const char* no_reason_token(NoReason r) {
    switch (r) {
    case NoReason::OddCycle:
        return "odd_cycle";
    case NoReason::MixedEdgeArc:
        return "mixed_edge_arc";
    case NoReason::Orbit:
        return "orbit";
    case NoReason::DirectionConflict:
        return "direction_conflict";
    case NoReason::BadCycle:
        return "bad_cycle";
    case NoReason::HasIncidence:
        return "incidence";
    }
    return "unknown";
}

MixedGraph parse_graph(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        throw parse_error("empty graph file", 1);

    MixedGraph g;
    bool saw_header = false;
    bool saw_vertices = false;
    for (const auto& line : lines) {
        auto toks = tokens_of(line.text);
        if (toks[0] == "mng") {
            if (saw_header)
                throw parse_error("duplicate mng header", line.number);
            if (toks.size() != 3)
                throw parse_error("expected 'mng <m> <n>'", line.number);
            g.m = parse_int(toks[1], line.number);
            g.n = parse_int(toks[2], line.number);
            saw_header = true;
        } else if (toks[0] == "v") {
            if (!saw_header)
                throw parse_error("'v' before the mng header", line.number);
            if (saw_vertices)
                throw parse_error("duplicate vertex count", line.number);
            if (toks.size() != 2)
                throw parse_error("expected 'v <vertex_count>'", line.number);
            g.vertex_count = parse_int(toks[1], line.number);
            saw_vertices = true;
        } else if (toks[0] == "e" || toks[0] == "a") {
            if (!saw_vertices)
                throw parse_error("incidence before the vertex count", line.number);
            if (toks.size() != 4)
                throw parse_error("expected '" + toks[0] + " <u> <v> <colour>'", line.number);
            int a = parse_int(toks[1], line.number);
            int b = parse_int(toks[2], line.number);
            int c = parse_int(toks[3], line.number);
            if (toks[0] == "e")
                g.add_edge(a, b, c);
            else
                g.add_arc(a, b, c);
        } else {
            throw parse_error("unknown directive '" + toks[0] + "'", line.number);
        }
    }
    if (!saw_header)
        throw parse_error("missing mng header", lines.front().number);
    return g;
}

void write_graph(std::ostream& out, const MixedGraph& g) {
    out << "mng " << g.m << " " << g.n << "\n";
    out << "v " << g.vertex_count << "\n";
    for (const auto& e : g.edges)
        out << "e " << e.u << " " << e.v << " " << e.colour << "\n";
    for (const auto& a : g.arcs)
        out << "a " << a.tail << " " << a.head << " " << a.colour << "\n";
}

SwitchGroup parse_group(std::istream& in, std::size_t closure_cap) {
    auto lines = read_lines(in);
    if (lines.empty())
        throw parse_error("empty group file", 1);

    auto header = tokens_of(lines[0].text);
    if (header.size() != 3 || header[0] != "grp")
        throw parse_error("expected 'grp <m> <n>' header", lines[0].number);
    int m = parse_int(header[1], lines[0].number);
    int n = parse_int(header[2], lines[0].number);
    if (m < 0 || n < 0)
        throw parse_error("colour counts must be non-negative", lines[0].number);

    std::vector<SwitchElement> generators;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream stream(lines[i].text);
        std::string tag;
        stream >> tag;
        if (tag != "g")
            throw parse_error("expected a 'g' generator line", lines[i].number);
        std::string rest;
        std::getline(stream, rest);
        SwitchElement e = parse_element_sections(rest, lines[i].number);
        if (e.m() != m || e.n() != n)
            throw parse_error("generator does not act on " + std::to_string(m) + " edge and " +
                                  std::to_string(n) + " arc colours",
                              lines[i].number);
        generators.push_back(std::move(e));
    }
    return closure(m, n, std::move(generators), closure_cap);
}

void write_group(std::ostream& out, const SwitchGroup& g) {
    out << "grp " << g.m() << " " << g.n() << "\n";
    for (const auto& e : g.generators()) {
        out << "g ";
        write_element_sections(out, e);
        out << "\n";
    }
}

Certificate parse_certificate(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty())
        throw parse_error("empty certificate file", 1);

    auto header = tokens_of(lines[0].text);
    if (header.size() < 2 || header[0] != "cert")
        throw parse_error("expected 'cert yes ...' or 'cert no ...' header", lines[0].number);

    if (header[1] == "yes") {
        if (header.size() < 3)
            throw parse_error("expected a target after 'cert yes'", lines[0].number);
        YesCertificate yes;
        if (header[2] == "k1") {
            yes.target = TargetKind::K1;
        } else if (header[2] == "k2" || header[2] == "t2") {
            yes.target = header[2] == "k2" ? TargetKind::K2 : TargetKind::T2;
            if (header.size() != 4)
                throw parse_error("expected 'cert yes " + header[2] + " <colour>'", lines[0].number);
            yes.colour = parse_int(header[3], lines[0].number);
        } else {
            throw parse_error("unknown target '" + header[2] + "'", lines[0].number);
        }

        bool saw_map = false;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            auto toks = tokens_of(lines[i].text);
            if (toks[0] == "s") {
                if (toks.size() < 2)
                    throw parse_error("expected 's <vertex> <element>'", lines[i].number);
                std::istringstream stream(lines[i].text);
                std::string tag, vertex_token;
                stream >> tag >> vertex_token;
                int vertex = parse_int(vertex_token, lines[i].number);
                std::string rest;
                std::getline(stream, rest);
                SwitchElement e = parse_element_sections(rest, lines[i].number);
                yes.sequence.steps.push_back(SwitchStep{vertex, std::move(e)});
            } else if (toks[0] == "map") {
                if (saw_map)
                    throw parse_error("duplicate map line", lines[i].number);
                if (toks.size() != 2)
                    throw parse_error("expected 'map <bits>'", lines[i].number);
                yes.side.assign(1, 0);
                for (char c : toks[1]) {
                    if (c != '0' && c != '1')
                        throw parse_error("map bits must be 0 or 1", lines[i].number);
                    yes.side.push_back(c == '1' ? 1 : 0);
                }
                saw_map = true;
            } else {
                throw parse_error("unexpected line in a YES certificate", lines[i].number);
            }
        }
        if (yes.target != TargetKind::K1 && !saw_map)
            throw parse_error("YES certificate is missing its map line", lines.back().number);
        return yes;
    }

    if (header[1] != "no" || header.size() != 3)
        throw parse_error("expected 'cert no <reason>'", lines[0].number);
    NoCertificate no;
    std::string reason = header[2];
    bool known = false;
    for (NoReason r : {NoReason::OddCycle, NoReason::MixedEdgeArc, NoReason::Orbit,
                       NoReason::DirectionConflict, NoReason::BadCycle, NoReason::HasIncidence})
        if (reason == no_reason_token(r)) {
            no.reason = r;
            known = true;
        }
    if (!known)
        throw parse_error("unknown NO reason '" + reason + "'", lines[0].number);

    if (lines.size() != 2)
        throw parse_error("a NO certificate needs exactly one witness line", lines[0].number);
    auto toks = tokens_of(lines[1].text);
    int ln = lines[1].number;
    switch (no.reason) {
    case NoReason::OddCycle:
        if (toks[0] != "walk" || toks.size() < 2)
            throw parse_error("expected 'walk <v...>'", ln);
        for (std::size_t i = 1; i < toks.size(); ++i)
            no.walk.push_back(parse_int(toks[i], ln));
        break;
    case NoReason::MixedEdgeArc:
        if (toks[0] != "mixed" || toks.size() != 3)
            throw parse_error("expected 'mixed e<id> a<id>'", ln);
        no.first = parse_incidence_token(toks[1], ln);
        no.second = parse_incidence_token(toks[2], ln);
        break;
    case NoReason::Orbit:
        if (toks[0] != "orbit" || toks.size() != 3)
            throw parse_error("expected 'orbit <inc> <inc>'", ln);
        no.first = parse_incidence_token(toks[1], ln);
        no.second = parse_incidence_token(toks[2], ln);
        break;
    case NoReason::DirectionConflict:
        if (toks[0] != "dir" || toks.size() != 3)
            throw parse_error("expected 'dir a<id> a<id>'", ln);
        no.first = parse_incidence_token(toks[1], ln);
        no.second = parse_incidence_token(toks[2], ln);
        break;
    case NoReason::BadCycle:
        if (toks[0] != "badcycle" || toks.size() < 4)
            throw parse_error("expected 'badcycle <i> <j> <v...>'", ln);
        no.bad_i = parse_int(toks[1], ln);
        no.bad_j = parse_int(toks[2], ln);
        for (std::size_t i = 3; i < toks.size(); ++i)
            no.walk.push_back(parse_int(toks[i], ln));
        break;
    case NoReason::HasIncidence:
        if (toks[0] != "inc" || toks.size() != 2)
            throw parse_error("expected 'inc <incidence>'", ln);
        no.first = parse_incidence_token(toks[1], ln);
        break;
    }
    return no;
}

void write_certificate(std::ostream& out, const Certificate& cert) {
    if (const auto* yes = std::get_if<YesCertificate>(&cert)) {
        if (!yes->has_sequence && yes->target != TargetKind::K1)
            throw invalid_input_error(
                "cannot write a verdict-only certificate; it has no sequence to check");
        out << "cert yes ";
        switch (yes->target) {
        case TargetKind::K1:
            out << "k1\n";
            return;
        case TargetKind::K2:
            out << "k2 " << yes->colour << "\n";
            break;
        case TargetKind::T2:
            out << "t2 " << yes->colour << "\n";
            break;
        }
        for (const auto& step : yes->sequence.steps) {
            out << "s " << step.vertex << " ";
            write_element_sections(out, step.element);
            out << "\n";
        }
        out << "map ";
        for (std::size_t v = 1; v < yes->side.size(); ++v)
            out << (yes->side[v] ? '1' : '0');
        out << "\n";
        return;
    }

    const auto& no = std::get<NoCertificate>(cert);
    out << "cert no " << no_reason_token(no.reason) << "\n";
    switch (no.reason) {
    case NoReason::OddCycle:
        out << "walk";
        for (int v : no.walk)
            out << " " << v;
        out << "\n";
        break;
    case NoReason::MixedEdgeArc:
        out << "mixed " << incidence_token(no.first) << " " << incidence_token(no.second) << "\n";
        break;
    case NoReason::Orbit:
        out << "orbit " << incidence_token(no.first) << " " << incidence_token(no.second) << "\n";
        break;
    case NoReason::DirectionConflict:
        out << "dir " << incidence_token(no.first) << " " << incidence_token(no.second) << "\n";
        break;
    case NoReason::BadCycle:
        out << "badcycle " << no.bad_i << " " << no.bad_j;
        for (int v : no.walk)
            out << " " << v;
        out << "\n";
        break;
    case NoReason::HasIncidence:
        out << "inc " << incidence_token(no.first) << "\n";
        break;
    }
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input_error("cannot open '" + path + "'");
    return in;
}

} // namespace

MixedGraph load_graph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

SwitchGroup load_group_file(const std::string& path, std::size_t closure_cap) {
    auto in = open_input(path);
    return parse_group(in, closure_cap);
}

Certificate load_certificate_file(const std::string& path) {
    auto in = open_input(path);
    return parse_certificate(in);
}

void save_certificate_file(const std::string& path, const Certificate& cert) {
    std::ofstream out(path);
    if (!out)
        throw invalid_input_error("cannot open '" + path + "' for writing");
    write_certificate(out, cert);
}

} // namespace switchhom
