// Acceptance gate: one line per criterion, nonzero exit if any of them fail.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/bimodule.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ideal.hpp"
#include "kgraph/katsura.hpp"
#include "kgraph/path.hpp"
#include "kgraph/random_graph.hpp"
#include "kgraph/suites.hpp"

#include "support.hpp"

using namespace kgraph;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << n << ": " << (ok ? "pass" : "FAIL") << " - " << what;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

const std::vector<std::string>& fixtures() {
    static const std::vector<std::string> names = {
        "remark.kg", "square.kg",    "cuntz_2.kg", "line_k1.kg",
        "ladder.kg", "receivers.kg", "cube_k3.kg"};
    return names;
}

Path edge_of(const KGraph& g, const std::string& id) {
    return edge_path(g, g.edge_index(id));
}

bool suite_passes(const KGraph& g, const std::string& name, std::string& detail,
                  int triples = 10000) {
    SuiteOptions opt;
    opt.random_triples = triples;
    for (const CheckReport& rep : run_suite(g, name, opt)) {
        for (const CheckItem& item : rep.items) {
            if (!item.pass) {
                detail = rep.title + ": " + item.name +
                         (item.detail.empty() ? "" : " [" + item.detail + "]");
                return false;
            }
        }
    }
    return true;
}

bool remark_fixture_facts(std::string& detail) {
    KGraph r = support::load_fixture("remark.kg");
    Path lam = edge_of(r, "lam");
    Path mu = edge_of(r, "mu");
    int v = r.vertex_index("v");

    if (predicates(r).locally_convex) {
        detail = "expected local convexity to fail";
        return false;
    }
    if (!lambda_min(r, lam, mu).empty()) {
        detail = "lam and mu must have no minimal common extension";
        return false;
    }

    std::vector<FESet> fe = enumerate_edge_fe_sets(r, v);
    if (fe.size() != 1 || fe[0].members.size() != 2) {
        detail = "the only edge-level exhaustive set should be {lam, mu}";
        return false;
    }
    if (is_exhaustive(r, v, {lam}).exhaustive) {
        detail = "{lam} must not be exhaustive in the full graph";
        return false;
    }
    KGraph no2 = remove_color(r, 2);
    Path lam2 = edge_of(no2, "lam");
    if (!is_exhaustive(no2, no2.vertex_index("v"), {lam2}).exhaustive) {
        detail = "{lam} must be exhaustive once colour 2 is deleted";
        return false;
    }

    IdealBasis basis = ck_ideal(r);
    AlgebraElement left = vertex_element(r, v);
    AlgebraElement right = add(monomial_element(r, lam, lam), monomial_element(r, mu, mu));
    if (!ck_equal(basis, left, right)) {
        detail = "(v,v) and (lam,lam)+(mu,mu) must agree in the quotient";
        return false;
    }
    if (ideal_contains(basis, monomial_element(r, mu, mu))) {
        detail = "(mu,mu) must stay outside the relation ideal";
        return false;
    }

    ColorContext ctx = make_color_context(r, 1);
    try {
        (void)phi_apply(ctx, vertex_element(ctx.sub, 0), Level::ck);
        detail = "quotient-level embedding must refuse";
        return false;
    } catch (const Error& e) {
        if (e.code != errc::not_locally_convex) {
            detail = std::string("wrong refusal: ") + e.what();
            return false;
        }
    }
    return true;
}

bool oracle_equivalence(std::string& detail) {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 50; ++round) {
        KGraph g = random_acyclic_2graph(rng, 6);
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::vector<int> pool;
            for (int c = 1; c <= g.k; ++c)
                for (int e : g.edges_into(v, c)) pool.push_back(e);
            if (pool.size() > 12) continue;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) {
                std::vector<Path> members;
                for (size_t i = 0; i < pool.size(); ++i)
                    if (mask & (std::uint64_t{1} << i)) members.push_back(edge_path(g, pool[i]));
                bool fast = is_exhaustive(g, v, members).exhaustive;
                bool slow = support::oracle_exhaustive(g, v, members);
                if (fast != slow) {
                    detail = "round " + std::to_string(round) + ", vertex " +
                             g.vertex_names[static_cast<size_t>(v)];
                    return false;
                }
            }
        }
    }
    return true;
}

bool lemma_suites(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        if (!suite_passes(g, "combinatorics", detail)) {
            detail = name + ": " + detail;
            return false;
        }
    }
    return true;
}

bool algebra_suite(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        if (!suite_passes(g, "toeplitz", detail, 10000)) {
            detail = name + ": " + detail;
            return false;
        }
    }
    return true;
}

bool bimodule_suite(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        if (!suite_passes(g, "bimodule", detail)) {
            detail = name + ": " + detail;
            return false;
        }
    }

    // one colour: inner products collapse to the classical graph correspondence
    KGraph line = support::load_fixture("line_k1.kg");
    ColorContext ctx = make_color_context(line, 1);
    std::vector<BimoduleElement> gens = x_generators(ctx, 1, natural_cap(line));
    for (const BimoduleElement& x : gens) {
        for (const BimoduleElement& y : gens) {
            AlgebraElement got = inner_product(ctx, x, y);
            const Monomial& mx = x.value.terms.begin()->first;
            const Monomial& my = y.value.terms.begin()->first;
            AlgebraElement want = mx == my
                                      ? vertex_element(ctx.sub, source(ctx.full, mx.lambda))
                                      : zero_element(ctx.sub);
            if (got != want) {
                detail = "inner product off the classical values";
                return false;
            }
        }
    }
    std::vector<int> receiving = h_jx(ctx);
    std::set<int> expect;
    for (const Edge& e : line.edges) expect.insert(e.dst);
    if (std::set<int>(receiving.begin(), receiving.end()) != expect) {
        detail = "the ideal's vertex list must be the receiving vertices";
        return false;
    }
    return true;
}

bool katsura_suite(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        if (!suite_passes(g, "katsura", detail)) {
            detail = name + ": " + detail;
            return false;
        }
    }
    return true;
}

bool appendix_suite(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        if (!suite_passes(g, "appendix", detail)) {
            detail = name + ": " + detail;
            return false;
        }
    }
    return true;
}

bool k_group_report(std::string& detail) {
    for (const std::string& name : fixtures()) {
        KGraph g = support::load_fixture(name);
        std::string cmd = std::string(KG_BINARY) + " analyze " +
                          support::fixture_path(name) + " 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            detail = "could not spawn the tool";
            return false;
        }
        std::string output;
        char buf[4096];
        while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
        int rc = pclose(pipe);
        if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 0) {
            detail = name + ": analyze exited nonzero";
            return false;
        }
        std::string expect = "K_0(TC*) = Z";
        if (g.vertex_count() != 1) expect += "^" + std::to_string(g.vertex_count());
        expect += " (free abelian, one generator per vertex), K_1(TC*) = 0";
        if (output.find(expect) == std::string::npos) {
            detail = name + ": missing '" + expect + "'";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::string detail;

    detail.clear();
    criterion(1, "two-arrow fixture facts hold exactly", remark_fixture_facts(detail), detail);

    detail.clear();
    criterion(2, "automaton matches brute force on 50 random graphs", oracle_equivalence(detail),
              detail);

    detail.clear();
    criterion(3, "combinatorial lemma suite passes on every fixture", lemma_suites(detail), detail);

    detail.clear();
    criterion(4, "algebra suite passes with 10000 random triples", algebra_suite(detail), detail);

    detail.clear();
    criterion(5, "bimodule suite and classical degeneration pass", bimodule_suite(detail), detail);

    detail.clear();
    criterion(6, "katsura suite passes on every fixture", katsura_suite(detail), detail);

    detail.clear();
    criterion(7, "appendix reduction suite passes on every fixture", appendix_suite(detail),
              detail);

    detail.clear();
    criterion(8, "analyze reports the free abelian K-groups", k_group_report(detail), detail);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
