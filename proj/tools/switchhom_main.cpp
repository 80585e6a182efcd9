#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "switchhom/io.hpp"
#include "switchhom/oracle.hpp"
#include "switchhom/solver.hpp"
#include "switchhom/substitution.hpp"

namespace {

using namespace switchhom;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInputError = 2;

MixedGraph load_valid_graph(const std::string& path) {
    MixedGraph g = load_graph_file(path);
    if (auto violation = validate(g))
        throw invalid_input_error(path + ": " + violation->message);
    return g;
}

void check_dims(const MixedGraph& g, const SwitchGroup& grp) {
    if (grp.m() != g.m || grp.n() != g.n)
        throw invalid_input_error("group acts on (" + std::to_string(grp.m()) + "," +
                                  std::to_string(grp.n()) + ") colours but the graph is (" +
                                  std::to_string(g.m) + "," + std::to_string(g.n) + ")-mixed");
}

std::string verdict_line(const Certificate& cert) {
    if (const auto* yes = std::get_if<YesCertificate>(&cert)) {
        switch (yes->target) {
        case TargetKind::K1:
            return "YES k1";
        case TargetKind::K2:
            return "YES k2 " + std::to_string(yes->colour);
        case TargetKind::T2:
            return "YES t2 " + std::to_string(yes->colour);
        }
    }
    return std::string("NO ") + no_reason_token(std::get<NoCertificate>(cert).reason);
}

int run_solve(const std::string& graph_path, const std::string& group_path,
              const std::string& cert_path, bool verdict_only, bool compress) {
    MixedGraph g = load_valid_graph(graph_path);
    SwitchGroup grp = load_group_file(group_path);
    check_dims(g, grp);
    if (verdict_only && !cert_path.empty())
        throw invalid_input_error("--verdict-only produces no sequence; drop --certificate");

    DecideOptions opts;
    opts.build_sequence = !verdict_only;
    Certificate cert = decide_2col(g, grp, opts);

    if (compress) {
        if (auto* yes = std::get_if<YesCertificate>(&cert); yes && yes->has_sequence) {
            if (!is_abelian(grp))
                throw invalid_input_error("--compress needs an Abelian group");
            yes->sequence = compress_abelian(yes->sequence, grp);
        }
    }

    std::cout << verdict_line(cert) << "\n";
    if (!cert_path.empty())
        save_certificate_file(cert_path, cert);
    return is_yes(cert) ? kExitYes : kExitNo;
}

int run_verify(const std::string& graph_path, const std::string& group_path,
               const std::string& cert_path) {
    MixedGraph g = load_valid_graph(graph_path);
    SwitchGroup grp = load_group_file(group_path);
    Certificate cert = load_certificate_file(cert_path);
    VerifyResult result = verify_certificate(g, grp, cert);
    if (result.ok) {
        std::cout << "VERIFIED\n";
        return kExitYes;
    }
    std::cout << "REFUTED: " << result.diagnostics << "\n";
    return kExitNo;
}

int run_classes(const std::string& group_path) {
    SwitchGroup grp = load_group_file(group_path);
    SwitchGroup edge_grp = grp.m() > 0 || grp.n() == 0
                               ? project_edge_action(grp)
                               : arc_group_to_edge_group(project_arc_action(grp));
    SubstitutionClasses classes = substitution_classes(edge_grp);
    for (Colour i = 1; i <= classes.m; ++i) {
        std::cout << "class " << i << " :";
        for (Colour j : classes.members[i - 1])
            std::cout << " " << j;
        std::cout << "\n";
    }
    std::cout << "c_gamma " << classes.c_gamma << "\n";
    return kExitYes;
}

int run_reduce(const std::string& graph_path, const std::string& group_path,
               const std::string& out_graph, const std::string& out_group) {
    MixedGraph g = load_valid_graph(graph_path);
    SwitchGroup grp = load_group_file(group_path);
    check_dims(g, grp);
    if (!g.edges.empty())
        throw invalid_input_error("reduce needs an arcs-only graph");
    auto bip_result = bipartition(g);
    auto* bip = std::get_if<Bipartition>(&bip_result);
    if (!bip)
        throw invalid_input_error("reduce needs a bipartite graph");

    MixedGraph reduced = arcs_to_edges(g, *bip);
    SwitchGroup reduced_grp = arc_group_to_edge_group(project_arc_action(grp));

    if (out_graph.empty() && out_group.empty()) {
        write_graph(std::cout, reduced);
        write_group(std::cout, reduced_grp);
        return kExitYes;
    }
    if (!out_graph.empty()) {
        std::ofstream out(out_graph);
        if (!out)
            throw invalid_input_error("cannot open '" + out_graph + "' for writing");
        write_graph(out, reduced);
    }
    if (!out_group.empty()) {
        std::ofstream out(out_group);
        if (!out)
            throw invalid_input_error("cannot open '" + out_group + "' for writing");
        write_group(out, reduced_grp);
    }
    return kExitYes;
}

int run_gadget(const std::string& edge_list_path, int m, int n, const std::string& out_path) {
    std::ifstream in(edge_list_path);
    if (!in)
        throw invalid_input_error("cannot open '" + edge_list_path + "'");

    std::vector<std::pair<int, int>> edges;
    int vertex_count = 0;
    bool explicit_count = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line(raw);
        std::string first;
        if (!(line >> first))
            continue;
        if (first == "v") {
            if (!(line >> vertex_count))
                throw parse_error("expected 'v <vertex_count>'", line_no);
            explicit_count = true;
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw parse_error("expected '<u> <v>' or 'v <count>'", line_no);
        }
        if (!(line >> v))
            throw parse_error("expected '<u> <v>'", line_no);
        edges.emplace_back(u, v);
        if (!explicit_count)
            vertex_count = std::max({vertex_count, u, v});
    }

    MixedGraph g = np_gadget(vertex_count, edges, m, n);
    if (out_path.empty()) {
        write_graph(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw invalid_input_error("cannot open '" + out_path + "' for writing");
        write_graph(out, g);
    }
    return kExitYes;
}

int run_oracle(const std::string& graph_path, const std::string& group_path,
               const std::string& cert_path, bool states, std::size_t cap) {
    MixedGraph g = load_valid_graph(graph_path);
    SwitchGroup grp = load_group_file(group_path);
    check_dims(g, grp);

    if (states) {
        ConfigurationSpace space = reachable_configurations(g, grp, cap);
        std::cout << "states " << space.size() << "\n";
    }
    OracleVerdict verdict = oracle_decide_2col(g, grp, cap);
    if (!verdict.yes) {
        std::cout << "NO\n";
        return kExitNo;
    }
    Certificate cert = *verdict.yes;
    std::cout << verdict_line(cert) << "\n";
    if (!cert_path.empty())
        save_certificate_file(cert_path, cert);
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying solver for switchable 2-colouring of (m,n)-mixed graphs"};
    app.require_subcommand(1);

    std::string graph_path, group_path, cert_path, out_graph, out_group, out_path;
    bool verdict_only = false, compress = false, states = false;
    int gadget_m = 1, gadget_n = 0;
    std::size_t cap = kDefaultStateCap;

    auto* solve = app.add_subcommand("solve", "Decide 2-colourability, certifying the answer");
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("group", group_path, "group file")->required();
    solve->add_option("--certificate", cert_path, "write the certificate here");
    solve->add_flag("--verdict-only", verdict_only, "skip building the switch sequence");
    solve->add_flag("--compress", compress,
                    "combine the YES sequence to one switch per vertex (Abelian groups)");

    auto* verify = app.add_subcommand("verify", "Check a certificate against graph and group");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("group", group_path, "group file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    auto* classes = app.add_subcommand("classes", "Print the substitution classes and c_gamma");
    classes->add_option("group", group_path, "group file")->required();

    auto* reduce = app.add_subcommand("reduce", "Encode an arcs-only graph over 2n edge colours");
    reduce->add_option("graph", graph_path, "graph file")->required();
    reduce->add_option("group", group_path, "group file")->required();
    reduce->add_option("--out-graph", out_graph, "write the encoded graph here");
    reduce->add_option("--out-group", out_group, "write the encoded group here");

    auto* gadget = app.add_subcommand("gadget", "Colour a classical edge list with colour 1");
    gadget->add_option("edges", graph_path, "edge list file")->required();
    gadget->add_option("--m", gadget_m, "edge colour count")->required();
    gadget->add_option("--n", gadget_n, "arc colour count");
    gadget->add_option("--out", out_path, "write the graph here");

    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth by state search");
    oracle->add_option("graph", graph_path, "graph file")->required();
    oracle->add_option("group", group_path, "group file")->required();
    oracle->add_option("--certificate", cert_path, "write the YES certificate here");
    oracle->add_flag("--states", states, "print the reachable state count");
    oracle->add_option("--cap", cap, "explored state cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (solve->parsed())
            return run_solve(graph_path, group_path, cert_path, verdict_only, compress);
        if (verify->parsed())
            return run_verify(graph_path, group_path, cert_path);
        if (classes->parsed())
            return run_classes(group_path);
        if (reduce->parsed())
            return run_reduce(graph_path, group_path, out_graph, out_group);
        if (gadget->parsed())
            return run_gadget(graph_path, gadget_m, gadget_n, out_path);
        if (oracle->parsed())
            return run_oracle(graph_path, group_path, cert_path, states, cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
