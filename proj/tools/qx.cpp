// qx: Q-index toolkit CLI. Exit codes: 0 success / all claims hold,
// 1 a verified claim fails, 2 configuration or resource error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qx/bounds.hpp"
#include "qx/canonical.hpp"
#include "qx/families.hpp"
#include "qx/graph6.hpp"
#include "qx/patterns.hpp"
#include "qx/search.hpp"
#include "qx/spectra.hpp"
#include "qx/verify.hpp"

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::vector<qx::PatternQuery> parse_forbidden(const std::string& csv) {
    std::vector<qx::PatternQuery> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(qx::parse_pattern(item));
    return out;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path == "-") return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
        stream = &file;
    }
};

int cmd_family(const std::string& spec_token) {
    qx::FamilySpec spec = qx::parse_family_spec(spec_token);
    qx::Graph g = qx::build(spec);
    auto q = qx::q_index(g);
    std::cout << "family:   " << qx::family_name(spec) << "\n"
              << "order:    " << g.order() << "\n"
              << "edges:    " << g.edge_count() << "\n"
              << "graph6:   " << qx::encode_graph6(g) << "\n"
              << "q:        " << fmt(q.value) << "  (residual " << fmt(q.residual)
              << ")\n";
    switch (spec.kind) {
        case qx::FamilyKind::Friendship: {
            std::cout << "closed:   " << fmt(qx::q_friendship_closed(spec.n)) << "\n";
            if (spec.n >= 4) {
                auto [lo, hi] = qx::friendship_bounds(spec.n);
                std::cout << "interval: (" << fmt(lo) << ", " << fmt(hi) << ")\n";
            }
            break;
        }
        case qx::FamilyKind::SplitSnk:
            if (spec.k == 2 && spec.n >= 4) {
                std::cout << "closed:   " << fmt(qx::q_snk2_closed(spec.n)) << "\n"
                          << "lower:    " << fmt(qx::snk2_lower_bound(spec.n)) << "\n";
            }
            break;
        case qx::FamilyKind::K1JoinTriangles:
            std::cout << "closed:   " << fmt(qx::q_k1_join_triangles_closed(spec.n))
                      << "\n";
            break;
        default:
            break;
    }
    return 0;
}

int cmd_eigen(const std::string& g6, bool adjacency) {
    qx::Graph g = qx::decode_graph6(g6);
    auto r = adjacency ? qx::mu_index(g) : qx::q_index(g);
    std::cout << fmt(r.value) << "\n";
    std::cerr << "iterations " << r.iterations << ", residual " << fmt(r.residual)
              << "\n";
    return 0;
}

int cmd_bounds(const std::string& g6) {
    qx::Graph g = qx::decode_graph6(g6);
    double q = qx::q_index(g).value;
    std::cout << "q:      " << fmt(q) << "\n";
    auto merris = qx::merris_bound(g);
    std::cout << "merris: " << fmt(merris.value) << "  (vertex "
              << *merris.attaining_vertex << ", slack " << fmt(merris.slack) << ")\n";
    auto das = qx::das_bound(g);
    std::cout << "das:    " << fmt(das.value) << "  (slack " << fmt(das.slack) << ")\n";
    return 0;
}

int cmd_cycles(const std::string& g6, int k) {
    qx::Graph g = qx::decode_graph6(g6);
    std::cout << (qx::contains_cycle(g, k) ? "true" : "false") << "\n";
    return 0;
}

int cmd_extremal(int n, const std::string& forbid, const std::string& objective,
                 bool connected, int shards) {
    qx::EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = parse_forbidden(forbid);
    spec.connected_only = connected;
    qx::Objective obj =
        objective == "mu" ? qx::Objective::Mu : qx::Objective::Q;
    qx::SearchOutcome outcome = qx::find_extremal_sharded(spec, obj, shards);
    std::cout << "objective:  " << (obj == qx::Objective::Q ? "q" : "mu") << "\n"
              << "max:        " << fmt(outcome.max_value) << "\n"
              << "examined:   " << outcome.graphs_examined << "\n"
              << "wall:       " << fmt(outcome.wall_seconds) << " s\n"
              << "maximizers: " << outcome.maximizers.size() << "\n";
    for (const auto& w : outcome.maximizers) std::cout << "  " << w << "\n";
    return 0;
}

int cmd_enumerate(int n, const std::string& forbid, bool connected,
                  const std::string& out_path) {
    qx::EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = parse_forbidden(forbid);
    spec.connected_only = connected;
    OutputTarget out(out_path);
    std::uint64_t count = qx::enumerate(
        spec, [&](const qx::Graph& g) { *out.stream << qx::encode_graph6(g) << "\n"; });
    std::cerr << count << " graphs\n";
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format,
               const std::string& out_path, int shards) {
    qx::SuiteConfig config = qx::load_suite_config(suite);
    if (!format.empty()) config.format = format;
    if (!out_path.empty()) config.out = out_path;
    if (shards > 0) config.shards = shards;

    auto certs = qx::run_suite(config);
    OutputTarget out(config.out);
    if (config.format == "json")
        qx::write_json(*out.stream, certs);
    else
        qx::write_csv(*out.stream, certs);
    return qx::any_failure(certs) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"signless-Laplacian spectral radius toolkit"};
    app.require_subcommand(1);

    std::string family_spec;
    auto* family = app.add_subcommand("family", "build a named family, report q");
    family->add_option("spec", family_spec, "family spec, e.g. F:9 S:9,2 S+:10,2 T2:8 K1T:7")
        ->required();

    std::string g6_q;
    auto* qcmd = app.add_subcommand("q", "Q-index of a graph6 graph");
    qcmd->add_option("graph6", g6_q)->required();

    std::string g6_mu;
    auto* mucmd = app.add_subcommand("mu", "adjacency spectral radius of a graph6 graph");
    mucmd->add_option("graph6", g6_mu)->required();

    std::string g6_bounds;
    auto* boundscmd = app.add_subcommand("bounds", "Merris and Das bounds with slack");
    boundscmd->add_option("graph6", g6_bounds)->required();

    std::string g6_cycles;
    int cycle_k = 0;
    auto* cyclescmd = app.add_subcommand("cycles", "test for a C_k subgraph");
    cyclescmd->add_option("graph6", g6_cycles)->required();
    cyclescmd->add_option("--k", cycle_k, "cycle length")->required();

    int ext_n = 0, ext_shards = 1;
    std::string ext_forbid, ext_objective = "q";
    bool ext_connected = false;
    auto* extremal = app.add_subcommand("extremal", "maximize q or mu over a class");
    extremal->add_option("--n", ext_n)->required();
    extremal->add_option("--forbid", ext_forbid, "comma list, e.g. C4 or C5,C6");
    extremal->add_option("--objective", ext_objective)
        ->check(CLI::IsMember({"q", "mu"}));
    extremal->add_flag("--connected", ext_connected);
    extremal->add_option("--shards", ext_shards);

    int enum_n = 0;
    std::string enum_forbid, enum_out = "-";
    bool enum_connected = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream isomorph-free graph6");
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_option("--forbid", enum_forbid);
    enumerate->add_flag("--connected", enum_connected);
    enumerate->add_option("--out", enum_out, "output path, '-' for stdout");

    std::string suite = "default", ver_format, ver_out;
    int ver_shards = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "'default' or a config file path");
    verify->add_option("--format", ver_format)->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", ver_out, "output path, '-' for stdout");
    verify->add_option("--shards", ver_shards);

    try {
        app.parse(argc, argv);
        if (*family) return cmd_family(family_spec);
        if (*qcmd) return cmd_eigen(g6_q, false);
        if (*mucmd) return cmd_eigen(g6_mu, true);
        if (*boundscmd) return cmd_bounds(g6_bounds);
        if (*cyclescmd) return cmd_cycles(g6_cycles, cycle_k);
        if (*extremal)
            return cmd_extremal(ext_n, ext_forbid, ext_objective, ext_connected,
                                ext_shards);
        if (*enumerate) return cmd_enumerate(enum_n, enum_forbid, enum_connected, enum_out);
        if (*verify) return cmd_verify(suite, ver_format, ver_out, ver_shards);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 2;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}
