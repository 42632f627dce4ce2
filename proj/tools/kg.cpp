#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kgraph/errors.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/io.hpp"
#include "kgraph/katsura.hpp"
#include "kgraph/path.hpp"
#include "kgraph/reduction.hpp"
#include "kgraph/report.hpp"
#include "kgraph/suites.hpp"

namespace {

kgraph::KGraph load(const std::string& path) {
    return kgraph::validate(kgraph::load_kgraph_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw kgraph::Error(kgraph::errc::parse_error, "cannot open " + out_path);
    f << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

// a path is written as dot-joined edge ids, range end first; a bare vertex
// name is the trivial path there
kgraph::Path parse_path_arg(const kgraph::KGraph& g, const std::string& word) {
    int v = g.vertex_index(word);
    if (v >= 0) return kgraph::vertex_path(g, v);
    std::vector<int> edges;
    for (const std::string& id : split(word, '.')) {
        int e = g.edge_index(id);
        if (e < 0) throw kgraph::Error(kgraph::errc::unknown_id, "no edge or vertex named " + id);
        edges.push_back(e);
    }
    return kgraph::make_path(g, g.edges[static_cast<size_t>(edges.front())].dst, edges);
}

int require_vertex(const kgraph::KGraph& g, const std::string& name) {
    int v = g.vertex_index(name);
    if (v < 0) throw kgraph::Error(kgraph::errc::unknown_id, "no vertex named " + name);
    return v;
}

std::string fe_inventory(const kgraph::KGraph& g, int only_vertex, std::uint64_t budget) {
    std::ostringstream out;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        if (only_vertex >= 0 && v != only_vertex) continue;
        std::vector<kgraph::FESet> sets = kgraph::enumerate_edge_fe_sets(g, v, budget);
        out << g.vertex_names[static_cast<size_t>(v)] << ": " << sets.size()
            << " edge-level exhaustive set" << (sets.size() == 1 ? "" : "s") << "\n";
        for (const kgraph::FESet& fe : sets) {
            out << "  {";
            for (size_t i = 0; i < fe.members.size(); ++i) {
                if (i) out << ", ";
                out << kgraph::path_to_string(g, fe.members[i]);
            }
            out << "}\n";
        }
    }
    return out.str();
}

std::string render_checks(const std::vector<kgraph::CheckReport>& reports) {
    std::ostringstream out;
    size_t total = 0, failed = 0;
    for (const kgraph::CheckReport& rep : reports) {
        out << "suite " << rep.title << "\n";
        for (const kgraph::CheckItem& it : rep.items) {
            ++total;
            if (!it.pass) ++failed;
            out << (it.pass ? "  pass  " : "  FAIL  ") << it.name;
            if (!it.detail.empty()) out << "  [" << it.detail << "]";
            out << "\n";
        }
    }
    out << total << " checks, " << failed << " failed\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite higher-rank graph toolkit"};
    app.require_subcommand(1);

    std::string file, out_path, set_arg, h_arg, vertex_arg;
    std::string suite = "all";
    int color = 1;
    int l_budget = 6;
    std::uint64_t seed = kgraph::SuiteOptions{}.seed;
    std::uint64_t budget = std::uint64_t{1} << 20;
    int triples = 10000;

    CLI::App* c_validate = app.add_subcommand("validate", "parse and validate a graph file");
    c_validate->add_option("file", file)->required();

    CLI::App* c_analyze = app.add_subcommand("analyze", "full structural report");
    c_analyze->add_option("file", file)->required();
    c_analyze->add_option("--budget", budget, "subset enumeration cap");
    c_analyze->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* c_fe = app.add_subcommand("fe", "edge-level exhaustive set inventory");
    c_fe->add_option("file", file)->required();
    c_fe->add_option("--vertex", vertex_arg, "restrict to one vertex");
    c_fe->add_option("--budget", budget, "subset enumeration cap");
    c_fe->add_option("--out", out_path, "write the inventory here instead of stdout");

    CLI::App* c_katsura = app.add_subcommand("katsura", "ideal data for one colour");
    c_katsura->add_option("file", file)->required();
    c_katsura->add_option("--color", color, "1-based colour")->required();
    c_katsura->add_option("--budget", budget, "subset enumeration cap");
    c_katsura->add_option("--out", out_path, "write the report here instead of stdout");

    CLI::App* c_reduce = app.add_subcommand(
        "reduce-fe", "build and verify a reduction certificate for an exhaustive set");
    c_reduce->add_option("file", file)->required();
    c_reduce->add_option("--vertex", vertex_arg, "vertex of the set")->required();
    c_reduce->add_option("--set", set_arg, "comma-separated members, each dot-joined edge ids")
        ->required();
    // the single-letter help short name would shadow --h otherwise
    c_reduce->set_help_flag("--help", "print help");
    c_reduce->add_option("--h", h_arg, "comma-separated hereditary vertex set to cut away");
    c_reduce->add_option("--l-budget", l_budget, "largest L the recursion may start from");
    c_reduce->add_option("--out", out_path, "write the certificate here instead of stdout");

    CLI::App* c_verify = app.add_subcommand("verify", "run a named property suite");
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--suite", suite, "combinatorics, toeplitz, bimodule, katsura, appendix, all");
    c_verify->add_option("--seed", seed, "seed for randomized checks");
    c_verify->add_option("--budget", budget, "subset enumeration cap");
    c_verify->add_option("--triples", triples, "random triples per randomized check");
    c_verify->add_option("--out", out_path, "write the results here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            kgraph::KGraph g = load(file);
            std::cout << "ok: k=" << g.k << ", " << g.vertex_count() << " vertices, "
                      << g.edge_count() << " edges, " << g.squares.size() << " squares\n";
            return 0;
        }
        if (c_analyze->parsed()) {
            kgraph::KGraph g = load(file);
            kgraph::AnalysisReport r = kgraph::analyze(g, budget);
            emit(kgraph::report_to_text(g, r), out_path);
            return 0;
        }
        if (c_fe->parsed()) {
            kgraph::KGraph g = load(file);
            int v = vertex_arg.empty() ? -1 : require_vertex(g, vertex_arg);
            emit(fe_inventory(g, v, budget), out_path);
            return 0;
        }
        if (c_katsura->parsed()) {
            kgraph::KGraph g = load(file);
            kgraph::ColorContext ctx = kgraph::make_color_context(g, color);
            kgraph::KatsuraReport kr = kgraph::katsura_report(ctx, budget);
            emit(kgraph::katsura_to_text(ctx, kr), out_path);
            return 0;
        }
        if (c_reduce->parsed()) {
            kgraph::KGraph g = load(file);
            std::set<std::string> h;
            for (const std::string& name : split(h_arg, ',')) h.insert(name);
            kgraph::KGraph res = kgraph::restrict_to_complement(g, h);
            kgraph::FESet fe;
            fe.v = require_vertex(res, vertex_arg);
            for (const std::string& word : split(set_arg, ','))
                fe.members.push_back(parse_path_arg(res, word));
            kgraph::ReductionCertificate cert = kgraph::reduce(g, h, fe, l_budget);
            kgraph::verify_certificate(g, cert);
            std::string text = kgraph::serialize_certificate(g, cert);
            emit(text + "verified: yes\n", out_path);
            return 0;
        }
        if (c_verify->parsed()) {
            kgraph::KGraph g = load(file);
            kgraph::SuiteOptions opt;
            opt.seed = seed;
            opt.budget = budget;
            opt.random_triples = triples;
            std::vector<kgraph::CheckReport> reports = kgraph::run_suite(g, suite, opt);
            emit(render_checks(reports), out_path);
            for (const kgraph::CheckReport& rep : reports)
                if (!rep.all_pass()) return 1;
            return 0;
        }
    } catch (const kgraph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
