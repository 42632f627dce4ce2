#include "kgraph/report.hpp"

#include <sstream>

#include "kgraph/algebra.hpp"
#include "kgraph/bimodule.hpp"
#include "kgraph/ideal.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

AnalysisReport analyze(const KGraph& g, std::uint64_t budget) {
    AnalysisReport r;
    r.k = g.k;
    r.vertices = static_cast<size_t>(g.vertex_count());
    r.edges = static_cast<size_t>(g.edge_count());
    r.edges_per_color.assign(static_cast<size_t>(g.k), 0);
    for (const Edge& e : g.edges) ++r.edges_per_color[e.color - 1];
    r.preds = predicates(g);

    Degree cap = r.preds.acyclic ? natural_cap(g) : Degree(static_cast<size_t>(g.k), 2);
    std::vector<Path> paths = all_paths(g, cap);
    for (const Path& p : paths)
        for (const Path& q : paths) {
            if (p.v != q.v) continue;
            ++r.lambda_min_pairs;
            size_t sz = lambda_min(g, p, q).size();
            if (sz > r.lambda_min_largest) r.lambda_min_largest = sz;
        }

    for (int v = 0; v < g.vertex_count(); ++v)
        for (FESet& fe : enumerate_edge_fe_sets(g, v, budget))
            r.edge_fe.push_back(std::move(fe));

    if (r.preds.acyclic) {
        r.ck_ideal_available = true;
        r.ck_ideal_dimension = ck_ideal(g).dimension();
    } else {
        r.notes.push_back("cyclic graph: CK-quotient linear algebra skipped");
    }

    if (r.preds.locally_convex) {
        for (int i = 1; i <= g.k; ++i) {
            ColorContext ctx = make_color_context(g, i);
            r.katsura.push_back(katsura_report(ctx, budget));
        }
    } else {
        r.notes.push_back("not locally convex: Katsura reports skipped");
    }

    std::ostringstream kt;
    kt << "K_0(TC*) = Z";
    if (r.vertices != 1) kt << "^" << r.vertices;
    kt << " (free abelian, one generator per vertex), K_1(TC*) = 0";
    r.k_theory = kt.str();
    return r;
}

std::string report_to_text(const KGraph& g, const AnalysisReport& r) {
    std::ostringstream out;
    out << "k = " << r.k << ", " << r.vertices << " vertices, " << r.edges << " edges (";
    for (size_t c = 0; c < r.edges_per_color.size(); ++c) {
        if (c) out << ", ";
        out << "color " << c + 1 << ": " << r.edges_per_color[c];
    }
    out << ")\n";
    out << "locally convex: " << (r.preds.locally_convex ? "yes" : "no")
        << "; no sources: " << (r.preds.no_sources ? "yes" : "no")
        << "; acyclic: " << (r.preds.acyclic ? "yes" : "no") << "\n";
    out << "finitely aligned: yes (finite graph; largest Lambda^min over " << r.lambda_min_pairs
        << " pairs has " << r.lambda_min_largest
        << (r.lambda_min_largest == 1 ? " element)\n" : " elements)\n");

    out << "edge-level exhaustive sets: " << r.edge_fe.size() << "\n";
    for (const FESet& fe : r.edge_fe) {
        out << "  " << g.vertex_names[fe.v] << ": {";
        for (size_t i = 0; i < fe.members.size(); ++i) {
            if (i) out << ", ";
            out << path_to_string(g, fe.members[i]);
        }
        out << "}\n";
    }

    if (r.ck_ideal_available)
        out << "CK ideal dimension: " << r.ck_ideal_dimension << "\n";

    for (const KatsuraReport& kr : r.katsura) {
        out << "katsura data, color " << kr.color << ":\n";
        auto vertex_list = [&](const std::vector<int>& vs) {
            std::string s = "{";
            for (size_t i = 0; i < vs.size(); ++i) {
                if (i) s += ", ";
                s += g.vertex_names[vs[i]];
            }
            return s + "}";
        };
        out << "  ker psi vertices: " << vertex_list(kr.ker) << "\n";
        out << "  H_JX: " << vertex_list(kr.hjx) << "\n";
        out << "  B~ entries: " << kr.entries.size() << "\n";
        for (const BTildeEntry& e : kr.entries) {
            out << "    at " << g.vertex_names[e.vertex] << ": E={";
            for (size_t i = 0; i < e.e.size(); ++i) {
                if (i) out << ", ";
                out << path_to_string(g, e.e[i]);
            }
            out << "}, F={";
            for (size_t i = 0; i < e.f.size(); ++i) {
                if (i) out << ", ";
                out << path_to_string(g, e.f[i]);
            }
            out << "}, in generator list: " << (e.in_generator_list ? "yes" : "no") << "\n";
        }
        out << "  generators: " << kr.generators.size() << "\n";
        for (const std::string& n : kr.notes) out << "  note: " << n << "\n";
    }

    for (const std::string& n : r.notes) out << "note: " << n << "\n";
    out << r.k_theory << "\n";
    return out.str();
}

std::string katsura_to_text(const ColorContext& ctx, const KatsuraReport& kr) {
    const KGraph& g = ctx.full;
    std::ostringstream out;
    auto vertex_list = [&](const std::vector<int>& vs) {
        std::string s = "{";
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ", ";
            s += g.vertex_names[vs[i]];
        }
        return s + "}";
    };
    auto path_list = [&](const std::vector<Path>& ps) {
        std::string s = "{";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ", ";
            s += path_to_string(g, ps[i]);
        }
        return s + "}";
    };
    out << "katsura data, color " << kr.color << ":\n";
    out << "  ker psi vertices: " << vertex_list(kr.ker) << "\n";
    out << "  H_JX: " << vertex_list(kr.hjx) << "\n";
    out << "  B~ entries: " << kr.entries.size() << "\n";
    for (const BTildeEntry& e : kr.entries) {
        out << "    at " << g.vertex_names[e.vertex] << ": E=" << path_list(e.e)
            << ", F=" << path_list(e.f)
            << ", in generator list: " << (e.in_generator_list ? "yes" : "no") << "\n";
    }
    out << "  generators (over the colour-deleted algebra): " << kr.generators.size() << "\n";
    for (size_t j = 0; j < kr.generators.size(); ++j) {
        size_t nterms = kr.expansions[j].terms.size();
        out << "    " << element_to_string(ctx.sub, kr.generators[j]) << "  ->  " << nterms
            << (nterms == 1 ? " rank-one term\n" : " rank-one terms\n");
    }
    for (const std::string& n : kr.notes) out << "  note: " << n << "\n";
    return out.str();
}

}  // namespace kgraph
