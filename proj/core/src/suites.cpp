#include "kgraph/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/bimodule.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/ideal.hpp"
#include "kgraph/io.hpp"
#include "kgraph/katsura.hpp"
#include "kgraph/path.hpp"
#include "kgraph/pathspace.hpp"
#include "kgraph/reduction.hpp"

namespace kgraph {

namespace {

Degree suite_cap(const KGraph& g) {
    if (predicates(g).acyclic) return natural_cap(g);
    return Degree(static_cast<size_t>(g.k), 2);
}

std::string count_note(long n, const char* what) {
    return std::to_string(n) + " " + what;
}

void merge(CheckReport& into, const CheckReport& part, const std::string& prefix) {
    for (const CheckItem& it : part.items)
        into.items.push_back(CheckItem{prefix + it.name, it.pass, it.detail});
}

// the definition itself, checked over every path at v (finite: acyclic only)
bool brute_exhaustive(const KGraph& g, const std::vector<Path>& all_at_v,
                      const std::vector<Path>& e) {
    for (const Path& p : all_at_v) {
        bool met = false;
        for (const Path& m : e) {
            if (!mce(g, m, p).empty()) {
                met = true;
                break;
            }
        }
        if (!met) return false;
    }
    return true;
}

void strip_zeros(RepVec& v) {
    for (auto it = v.begin(); it != v.end();) {
        if (it->second == 0)
            it = v.erase(it);
        else
            ++it;
    }
}

CheckReport run_combinatorics(const KGraph& g, const SuiteOptions& opt) {
    CheckReport rep;
    rep.title = "combinatorics";
    GraphPredicates preds = predicates(g);
    Degree cap = suite_cap(g);
    std::vector<Path> paths = all_paths(g, cap);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));

    {
        long runs = 0;
        int fails = 0;
        for (const Path& p : paths) {
            if (p.word.empty()) continue;
            for (int round = 0; round < 3; ++round) {
                std::vector<int> word;
                Path rest = p;
                while (!rest.word.empty()) {
                    std::vector<int> colors;
                    for (int c = 1; c <= g.k; ++c)
                        if (rest.deg[static_cast<size_t>(c - 1)] > 0) colors.push_back(c);
                    size_t at = std::uniform_int_distribution<size_t>(0, colors.size() - 1)(rng);
                    auto [head, tail] = factor(g, rest, unit_degree(g.k, colors[at]));
                    word.push_back(head.word[0]);
                    rest = tail;
                }
                ++runs;
                if (make_path(g, p.v, word) != p) ++fails;
            }
        }
        rep.add("edge-word reorderings canonicalize identically", fails == 0,
                fails == 0 ? count_note(runs, "rewrites")
                           : count_note(fails, "mismatching rewrites"));
    }

    {
        long checked = 0;
        bool ok = true;
        std::string bad;
        for (const Path& eta : paths) {
            for (const Path& rho : paths) {
                if (eta.v != rho.v) continue;
                for (const Degree& m : degrees_upto(rho.deg)) {
                    auto [head, tail] = factor(g, rho, m);
                    std::set<std::pair<Path, Path>> lhs;
                    for (const auto& pr : lambda_min(g, eta, rho)) lhs.insert(pr);
                    std::set<std::pair<Path, Path>> rhs;
                    for (const auto& [alpha, beta] : lambda_min(g, eta, head))
                        for (const auto& [gamma, delta_] : lambda_min(g, beta, tail))
                            rhs.insert({compose(g, alpha, gamma), delta_});
                    ++checked;
                    if (lhs != rhs) {
                        ok = false;
                        bad = "eta=" + path_to_string(g, eta) + " rho=" + path_to_string(g, rho) +
                              " m=" + degree_to_string(m);
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        rep.add("minimal common extensions factorise", ok,
                ok ? count_note(checked, "(eta, rho, m) triples") : bad);
    }

    {
        Degree lim = degree_meet(cap, Degree(static_cast<size_t>(g.k), 2));
        bool inc_ok = true, eq_ok = true;
        long combos = 0;
        std::string inc_bad, eq_bad;
        for (const Degree& m : degrees_upto(lim)) {
            for (const Degree& n : degrees_upto(lim)) {
                for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
                    std::set<Path> prod;
                    for (const Path& p : lambda_leq(g, v, m))
                        for (const Path& q : lambda_leq(g, source(g, p), n))
                            prod.insert(compose(g, p, q));
                    std::vector<Path> whole = lambda_leq(g, v, degree_add(m, n));
                    std::set<Path> whole_set(whole.begin(), whole.end());
                    ++combos;
                    for (const Path& p : prod) {
                        if (!whole_set.count(p)) {
                            inc_ok = false;
                            inc_bad = path_to_string(g, p) + " escapes at m=" +
                                      degree_to_string(m) + " n=" + degree_to_string(n);
                        }
                    }
                    if (preds.locally_convex && prod != whole_set) {
                        eq_ok = false;
                        eq_bad = "at " + g.vertex_names[static_cast<size_t>(v)] + ", m=" +
                                 degree_to_string(m) + " n=" + degree_to_string(n);
                    }
                }
            }
        }
        rep.add("boundary products stay in the boundary set", inc_ok,
                inc_ok ? count_note(combos, "(m, n, v) combinations") : inc_bad);
        if (preds.locally_convex)
            rep.add("boundary products exhaust the boundary set", eq_ok,
                    eq_ok ? count_note(combos, "(m, n, v) combinations") : eq_bad);
        else
            rep.skip("boundary products exhaust the boundary set", "not locally convex");
    }

    if (preds.locally_convex) {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (size_t e = 0; e < g.edge_count() && ok; ++e) {
            int i = g.edges[e].color;
            for (const Path& nu : paths) {
                if (nu.v != g.edges[e].dst || nu.deg[static_cast<size_t>(i - 1)] != 0) continue;
                ++checked;
                if (g.edges_into(source(g, nu), i).empty()) {
                    ok = false;
                    bad = "colour " + std::to_string(i) + " dies past " + path_to_string(g, nu);
                    break;
                }
            }
        }
        rep.add("colour edges extend past colour-free paths", ok,
                ok ? count_note(checked, "(edge, path) pairs") : bad);
    } else {
        rep.skip("colour edges extend past colour-free paths", "not locally convex");
    }

    if (g.k < 2) {
        rep.skip("colour-deleted exhaustive sets stay exhaustive", "k = 1: nothing to delete");
    } else if (!preds.locally_convex) {
        rep.skip("colour-deleted exhaustive sets stay exhaustive", "not locally convex");
    } else {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (int i = 1; i <= g.k && ok; ++i) {
            KGraph gi = remove_color(g, i);
            for (int v = 0; v < static_cast<int>(gi.vertex_count()) && ok; ++v) {
                for (const FESet& fe : enumerate_edge_fe_sets(gi, v, opt.budget)) {
                    std::vector<Path> mapped;
                    for (const Path& m : fe.members) {
                        int full_e = g.edge_index(gi.edge_names[static_cast<size_t>(m.word[0])]);
                        mapped.push_back(edge_path(g, full_e));
                    }
                    int full_v = g.vertex_index(gi.vertex_names[static_cast<size_t>(fe.v)]);
                    ++checked;
                    if (!is_exhaustive(g, full_v, mapped).exhaustive) {
                        ok = false;
                        bad = "a set at " + g.vertex_names[static_cast<size_t>(full_v)] +
                              " stops being exhaustive with colour " + std::to_string(i) +
                              " restored";
                        break;
                    }
                }
            }
        }
        rep.add("colour-deleted exhaustive sets stay exhaustive", ok,
                ok ? count_note(checked, "sets") : bad);
    }

    {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (int v = 0; v < static_cast<int>(g.vertex_count()) && ok; ++v) {
            for (const FESet& fe : enumerate_edge_fe_sets(g, v, opt.budget)) {
                Degree bound = zero_degree(g.k);
                for (const Path& m : fe.members) bound = degree_join(bound, m.deg);
                for (const Path& mu : paths) {
                    if (mu.v != v) continue;
                    std::vector<Path> ex = ext(g, mu, fe.members);
                    ++checked;
                    for (const Path& b : ex) {
                        if (!degree_leq(b.deg, bound)) {
                            ok = false;
                            bad = "degree of " + path_to_string(g, b) + " exceeds the join for mu=" +
                                  path_to_string(g, mu);
                        }
                    }
                    if (ok && !is_exhaustive(g, source(g, mu), ex).exhaustive) {
                        ok = false;
                        bad = "Ext(" + path_to_string(g, mu) + "; E) not exhaustive at its source";
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        }
        rep.add("Ext sets are bounded and exhaustive", ok,
                ok ? count_note(checked, "(E, mu) pairs") : bad);
    }

    if (preds.acyclic) {
        std::vector<Path> whole = all_paths(g);
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (int v = 0; v < static_cast<int>(g.vertex_count()) && ok; ++v) {
            std::vector<Path> at_v;
            for (const Path& p : whole)
                if (p.v == v) at_v.push_back(p);
            std::vector<int> pool;
            for (int c = 1; c <= g.k; ++c)
                for (int e : g.edges_into(v, c)) pool.push_back(e);
            if (pool.size() > 16) continue;
            for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
                std::vector<Path> members;
                for (size_t b = 0; b < pool.size(); ++b)
                    if (mask & (1u << b)) members.push_back(edge_path(g, pool[b]));
                ++checked;
                bool fast = is_exhaustive(g, v, members).exhaustive;
                bool slow = brute_exhaustive(g, at_v, members);
                if (fast != slow) {
                    ok = false;
                    bad = "disagreement at " + g.vertex_names[static_cast<size_t>(v)];
                    break;
                }
            }
        }
        rep.add("automaton matches the brute-force definition", ok,
                ok ? count_note(checked, "edge subsets") : bad);
    } else {
        rep.skip("automaton matches the brute-force definition",
                 "cyclic graph: the path set is infinite");
    }

    {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (int v = 0; v < static_cast<int>(g.vertex_count()) && ok; ++v) {
            for (const FESet& fe : enumerate_edge_fe_sets(g, v, opt.budget)) {
                ++checked;
                try {
                    delta(g, v, fe.members);
                } catch (const Error& err) {
                    ok = false;
                    bad = err.what();
                }
            }
        }
        rep.add("gap projections expand to the subset sum", ok,
                ok ? count_note(checked, "exhaustive sets") : bad);
    }

    {
        KGraphSpec s1 = to_spec(g);
        std::string text = serialize(s1);
        KGraphSpec s2 = parse_kgraph(text);
        bool ok = serialize(s2) == text;
        if (ok) {
            KGraph g2 = validate(s2);
            ok = g2.vertex_count() == g.vertex_count() && g2.edge_count() == g.edge_count();
        }
        rep.add("spec round-trip is the identity", ok);
    }

    return rep;
}

CheckReport run_toeplitz(const KGraph& g, const SuiteOptions& opt) {
    CheckReport rep;
    rep.title = "toeplitz";
    GraphPredicates preds = predicates(g);
    Degree cap = suite_cap(g);
    std::vector<Path> paths = all_paths(g, cap);
    std::vector<Monomial> monos = all_monomials(g, cap);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed ^ 0x9e3779b9ULL));
    auto elem = [&](const Monomial& m) { return monomial_element(g, m.lambda, m.mu); };
    auto pick = [&]() -> const Monomial& {
        return monos[std::uniform_int_distribution<size_t>(0, monos.size() - 1)(rng)];
    };

    {
        int bad_assoc = 0, bad_star = 0;
        for (int t = 0; t < opt.random_triples; ++t) {
            AlgebraElement a = elem(pick()), b = elem(pick()), c = elem(pick());
            if (mul(g, mul(g, a, b), c) != mul(g, a, mul(g, b, c))) ++bad_assoc;
            if (adjoint(mul(g, a, b)) != mul(g, adjoint(b), adjoint(a))) ++bad_star;
        }
        rep.add("multiplication associative on random triples", bad_assoc == 0,
                bad_assoc == 0 ? count_note(opt.random_triples, "triples")
                               : count_note(bad_assoc, "failures"));
        rep.add("adjoint reverses products", bad_star == 0,
                bad_star == 0 ? count_note(opt.random_triples, "pairs")
                              : count_note(bad_star, "failures"));
    }

    {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (const Path& lam : paths) {
            for (const Path& mu : paths) {
                if (source(g, lam) != mu.v) continue;
                Path joined = compose(g, lam, mu);
                AlgebraElement lhs =
                    mul(g, monomial_element(g, lam, vertex_path(g, source(g, lam))),
                        monomial_element(g, mu, vertex_path(g, source(g, mu))));
                ++checked;
                if (lhs != monomial_element(g, joined, vertex_path(g, source(g, joined)))) {
                    ok = false;
                    bad = path_to_string(g, lam) + " . " + path_to_string(g, mu);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("isometries compose", ok, ok ? count_note(checked, "composable pairs") : bad);
    }

    {
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (const Path& lam : paths) {
            for (const Path& mu : paths) {
                if (lam.deg != mu.deg) continue;
                AlgebraElement got =
                    mul(g, monomial_element(g, vertex_path(g, source(g, lam)), lam),
                        monomial_element(g, mu, vertex_path(g, source(g, mu))));
                AlgebraElement want = lam == mu ? vertex_element(g, source(g, lam))
                                                : zero_element(g);
                ++checked;
                if (got != want) {
                    ok = false;
                    bad = path_to_string(g, lam) + " vs " + path_to_string(g, mu);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("same-degree isometries are orthogonal", ok,
                ok ? count_note(checked, "pairs") : bad);
    }

    {
        int rounds = std::min(opt.random_triples, 2000);
        int bad_sum = 0, bad_grade = 0;
        std::uniform_int_distribution<int> coeff(-2, 2);
        auto random_combo = [&]() {
            AlgebraElement a = zero_element(g);
            for (int t = 0; t < 2; ++t) {
                int c = coeff(rng);
                if (c == 0) c = 1;
                const Monomial& m = pick();
                a = add(a, monomial_element(g, m.lambda, m.mu, c));
            }
            return a;
        };
        for (int t = 0; t < rounds; ++t) {
            AlgebraElement a = random_combo(), b = random_combo();
            std::map<Degree, AlgebraElement> pa = spectral_decompose(a);
            std::map<Degree, AlgebraElement> pb = spectral_decompose(b);
            AlgebraElement back = zero_element(g);
            for (const auto& [grade, part] : pa) back = add(back, part);
            if (back != a) ++bad_sum;
            std::map<Degree, AlgebraElement> expect;
            for (const auto& [ga, ca] : pa) {
                for (const auto& [gb, cb] : pb) {
                    AlgebraElement prod = mul(g, ca, cb);
                    if (prod.is_zero()) continue;
                    Degree h = degree_add(ga, gb);
                    auto it = expect.find(h);
                    if (it == expect.end())
                        expect.emplace(h, prod);
                    else
                        it->second = add(it->second, prod);
                }
            }
            for (auto it = expect.begin(); it != expect.end();) {
                if (it->second.is_zero())
                    it = expect.erase(it);
                else
                    ++it;
            }
            if (expect != spectral_decompose(mul(g, a, b))) ++bad_grade;
        }
        rep.add("spectral components sum back", bad_sum == 0,
                bad_sum == 0 ? count_note(rounds, "elements") : count_note(bad_sum, "failures"));
        rep.add("grading respects multiplication", bad_grade == 0,
                bad_grade == 0 ? count_note(rounds, "pairs") : count_note(bad_grade, "failures"));
    }

    {
        TruncatedRep tr = make_rep(g, Degree(static_cast<size_t>(g.k), 3),
                                   Degree(static_cast<size_t>(g.k), 2));
        int rounds = std::min(opt.random_triples, 2000);
        long used = 0;
        int bad_mult = 0;
        for (int t = 0; t < rounds; ++t) {
            const Monomial& ma = pick();
            const Monomial& mb = pick();
            if (!degree_leq(degree_add(ma.lambda.deg, mb.lambda.deg), tr.headroom)) continue;
            if (!degree_leq(ma.mu.deg, tr.cap) || !degree_leq(mb.mu.deg, tr.cap)) continue;
            AlgebraElement a = elem(ma), b = elem(mb);
            RepMatrix ra = rep_element(g, tr, a);
            RepMatrix rb = rep_element(g, tr, b);
            RepMatrix rab = rep_element(g, tr, mul(g, a, b));
            ++used;
            for (const Path& col : tr.basis) {
                if (!tr.in_safe_zone(col)) continue;
                RepVec unit;
                unit[tr.index_of(col)] = 1;
                RepVec lhs = apply_matrix(ra, apply_matrix(rb, unit));
                RepVec rhs = apply_matrix(rab, unit);
                strip_zeros(lhs);
                strip_zeros(rhs);
                if (lhs != rhs) {
                    ++bad_mult;
                    break;
                }
            }
        }
        rep.add("window representation multiplicative on the safe zone", bad_mult == 0,
                bad_mult == 0 ? count_note(used, "pairs") : count_note(bad_mult, "failures"));

        int bad_nonzero = 0, bad_linear = 0;
        long combos = 0;
        std::uniform_int_distribution<int> coeff(1, 3);
        std::uniform_int_distribution<int> nterms(1, 3);
        for (int t = 0; t < rounds; ++t) {
            std::map<Monomial, Rational> picked;
            int want = nterms(rng);
            for (int j = 0; j < want * 3 && static_cast<int>(picked.size()) < want; ++j) {
                const Monomial& m = pick();
                if (!degree_leq(m.lambda.deg, tr.cap) || !degree_leq(m.mu.deg, tr.cap)) continue;
                int c = coeff(rng) * (t % 2 == 0 ? 1 : -1);
                picked.emplace(m, c);
            }
            if (picked.empty()) continue;
            AlgebraElement a = zero_element(g);
            AlgebraElement b = zero_element(g);
            bool first = true;
            for (const auto& [m, c] : picked) {
                AlgebraElement one = monomial_element(g, m.lambda, m.mu, c);
                a = add(a, one);
                if (first) b = one;
                first = false;
            }
            ++combos;
            if (rep_element(g, tr, a).empty()) ++bad_nonzero;
            RepMatrix left = rep_element(g, tr, add(a, b));
            RepMatrix right = rep_element(g, tr, a);
            for (const auto& [pos, c] : rep_element(g, tr, b)) {
                auto it = right.find(pos);
                if (it == right.end())
                    right.emplace(pos, c);
                else {
                    it->second = it->second + c;
                    if (it->second == 0) right.erase(it);
                }
            }
            if (left != right) ++bad_linear;
        }
        rep.add("nonzero combinations act nonzero on the window", bad_nonzero == 0,
                bad_nonzero == 0 ? count_note(combos, "combinations")
                                 : count_note(bad_nonzero, "failures"));
        rep.add("window representation is linear", bad_linear == 0,
                bad_linear == 0 ? count_note(combos, "sums") : count_note(bad_linear, "failures"));
    }

    {
        TruncatedRep tr = make_rep(g);
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (int v = 0; v < static_cast<int>(g.vertex_count()) && ok; ++v) {
            for (const FESet& fe : enumerate_edge_fe_sets(g, v, opt.budget)) {
                ++checked;
                if (!delta_witness(g, tr, fe.v, fe.members).nonzero) {
                    ok = false;
                    bad = "gap projection vanished at " + g.vertex_names[static_cast<size_t>(v)];
                }
            }
        }
        rep.add("gap projections act nonzero on the path window", ok,
                ok ? count_note(checked, "exhaustive sets") : bad);
    }

    if (preds.acyclic) {
        IdealBasis basis = ck_ideal(g);
        bool ok = true;
        long checked = 0;
        std::string bad;
        for (const auto& [pivot, row] : basis.rows) {
            AlgebraElement r = from_vec(g, *basis.index, row);
            if (!ideal_contains(basis, adjoint(r))) {
                ok = false;
                bad = "adjoint escapes";
            }
            for (int t = 0; t < 40 && ok; ++t) {
                AlgebraElement m = elem(pick());
                ++checked;
                if (!ideal_contains(basis, mul(g, r, m)) ||
                    !ideal_contains(basis, mul(g, m, r))) {
                    ok = false;
                    bad = "a monomial multiple escapes";
                }
            }
            if (!ok) break;
        }
        rep.add("relation ideal closed under multiplication", ok,
                ok ? count_note(checked, "products") : bad);
    } else {
        rep.skip("relation ideal closed under multiplication",
                 "cyclic graph: exact quotient linear algebra needs a finite monomial basis");
    }

    return rep;
}

CheckReport run_bimodule(const KGraph& g, const SuiteOptions& opt) {
    CheckReport rep;
    rep.title = "bimodule";
    GraphPredicates preds = predicates(g);
    Degree cap = suite_cap(g);
    for (int i = 1; i <= g.k; ++i) {
        std::string pfx = "colour " + std::to_string(i) + ": ";
        ColorContext ctx = make_color_context(g, i);

        merge(rep, check_toeplitz_axioms(ctx, Level::toeplitz), pfx + "formal level: ");
        if (preds.locally_convex && preds.acyclic) {
            merge(rep, check_toeplitz_axioms(ctx, Level::ck), pfx + "quotient level: ");
        } else if (!preds.locally_convex) {
            bool refused = false;
            try {
                check_toeplitz_axioms(ctx, Level::ck);
            } catch (const Error& e) {
                refused = e.code == errc::not_locally_convex;
            }
            rep.add(pfx + "quotient level refuses without local convexity", refused);
        } else {
            bool refused = false;
            try {
                check_toeplitz_axioms(ctx, Level::ck);
            } catch (const Error& e) {
                refused = e.code == errc::not_acyclic;
            }
            rep.add(pfx + "quotient level refuses on cyclic graphs", refused);
        }

        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; m + n <= 3; ++n) {
                Degree xcap = cap;
                xcap[static_cast<size_t>(i - 1)] =
                    std::max(xcap[static_cast<size_t>(i - 1)], m + n);
                CheckReport part = verify_omega_multiplicativity(ctx, m, n, xcap);
                merge(rep, part, pfx);
            }
        }

        {
            bool ok = true;
            long checked = 0;
            std::string bad;
            for (int n = 0; n <= 3 && ok; ++n) {
                Degree xcap = cap;
                xcap[static_cast<size_t>(i - 1)] = std::max(xcap[static_cast<size_t>(i - 1)], n);
                std::vector<BimoduleElement> gens = x_generators(ctx, n, xcap);
                std::vector<TensorElement> images;
                images.reserve(gens.size());
                for (const BimoduleElement& x : gens)
                    images.push_back(omega(ctx, n, x.value.terms.begin()->first));
                for (size_t a = 0; a < gens.size() && ok; ++a) {
                    for (size_t b = 0; b < gens.size(); ++b) {
                        ++checked;
                        if (tensor_inner_product(ctx, images[a], images[b]) !=
                            inner_product(ctx, gens[a], gens[b])) {
                            ok = false;
                            bad = "Gram entry differs in the degree-" + std::to_string(n) +
                                  " module";
                            break;
                        }
                    }
                }
            }
            rep.add(pfx + "tensor factorisation preserves inner products", ok,
                    ok ? count_note(checked, "Gram entries") : bad);
        }

        {
            Degree xcap = cap;
            xcap[static_cast<size_t>(i - 1)] = std::max(xcap[static_cast<size_t>(i - 1)], 1);
            std::vector<BimoduleElement> xg = x_generators(ctx, 1, xcap);
            std::vector<AlgebraElement> alg;
            for (int v = 0; v < static_cast<int>(ctx.sub.vertex_count()); ++v)
                alg.push_back(vertex_element(ctx.sub, v));
            for (size_t e = 0; e < ctx.sub.edge_count(); ++e) {
                Path ep = edge_path(ctx.sub, static_cast<int>(e));
                Path sp = vertex_path(ctx.sub, source(ctx.sub, ep));
                alg.push_back(monomial_element(ctx.sub, ep, sp));
                alg.push_back(monomial_element(ctx.sub, sp, ep));
            }
            bool ok = true;
            long checked = 0;
            std::string bad;
            for (const AlgebraElement& a : alg) {
                for (const BimoduleElement& x : xg) {
                    for (const BimoduleElement& y : xg) {
                        ++checked;
                        AlgebraElement lhs = inner_product(ctx, act_left(ctx, a, x), y);
                        AlgebraElement rhs = inner_product(ctx, x, act_left(ctx, adjoint(a), y));
                        if (lhs != rhs) {
                            ok = false;
                            bad = "adjointability fails for " +
                                  element_to_string(ctx.sub, a);
                            break;
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
            rep.add(pfx + "left action is adjointable", ok,
                    ok ? count_note(checked, "(a, x, y) triples") : bad);
        }

        if (preds.locally_convex && preds.acyclic) {
            bool inside = xxstar_in_phi_image(ctx);
            rep.add(pfx + "corner membership of x y* decided", true,
                    inside ? "inside the embedded corner" : "outside the embedded corner");
        } else if (!preds.locally_convex) {
            bool refused = false;
            try {
                xxstar_in_phi_image(ctx);
            } catch (const Error& e) {
                refused = e.code == errc::not_locally_convex;
            }
            rep.add(pfx + "corner membership refuses without local convexity", refused);
        } else {
            bool refused = false;
            try {
                xxstar_in_phi_image(ctx);
            } catch (const Error& e) {
                refused = e.code == errc::not_acyclic;
            }
            rep.add(pfx + "corner membership refuses on cyclic graphs", refused);
            // monomials are a basis of the formal algebra, so a colour-i loop
            // q_e q_e* can never be a combination of degree-zero monomials
            const std::vector<int>& loops = [&] {
                for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
                    if (!g.edges_into(v, i).empty()) return std::cref(g.edges_into(v, i));
                return std::cref(g.edges_into(0, i));
            }();
            if (!loops.empty()) {
                Path ep = edge_path(g, loops.front());
                AlgebraElement ee = monomial_element(g, ep, ep);
                bool escapes = false;
                for (const auto& [m, c] : ee.terms)
                    if (m.lambda.deg[static_cast<size_t>(i - 1)] != 0 ||
                        m.mu.deg[static_cast<size_t>(i - 1)] != 0)
                        escapes = true;
                rep.add(pfx + "colour loops escape the corner at the formal level", escapes);
            }
        }
    }
    return rep;
}

CheckReport run_katsura(const KGraph& g, const SuiteOptions& opt) {
    CheckReport rep;
    rep.title = "katsura";
    GraphPredicates preds = predicates(g);
    if (!preds.locally_convex) {
        bool refused = false;
        try {
            katsura_report(make_color_context(g, 1), opt.budget);
        } catch (const Error& e) {
            refused = e.code == errc::not_locally_convex;
        }
        rep.add("report generation refuses without local convexity", refused);
        return rep;
    }

    Degree cap = suite_cap(g);
    for (int i = 1; i <= g.k; ++i) {
        std::string pfx = "colour " + std::to_string(i) + ": ";
        ColorContext ctx = make_color_context(g, i);
        KatsuraReport kr = katsura_report(ctx, opt.budget);

        {
            bool ok = true;
            for (const AlgebraElement& gen : kr.generators)
                if (spectral_decompose(gen).size() > 1) ok = false;
            rep.add(pfx + "generators grading-homogeneous", ok,
                    count_note(static_cast<long>(kr.generators.size()), "generators"));
        }

        Degree xcap = cap;
        xcap[static_cast<size_t>(i - 1)] = std::max(xcap[static_cast<size_t>(i - 1)], 1);
        std::vector<BimoduleElement> xg = x_generators(ctx, 1, xcap);

        {
            std::vector<Monomial> smonos = all_monomials(ctx.sub, suite_cap(ctx.sub));
            bool ok = true;
            long checked = 0;
            for (int v : kr.hjx) {
                for (int w : kr.ker) {
                    for (const Monomial& m : smonos) {
                        if (m.lambda.v != v || m.mu.v != w) continue;
                        AlgebraElement a = monomial_element(ctx.sub, m.lambda, m.mu);
                        for (const BimoduleElement& x : xg) {
                            ++checked;
                            if (!act_left(ctx, a, x).value.is_zero()) ok = false;
                        }
                    }
                }
            }
            rep.add(pfx + "corners into the kernel act as zero", ok,
                    count_note(checked, "(a, x) pairs"));
        }

        {
            bool ok = true;
            for (int v : kr.hjx) {
                std::vector<Path> members;
                for (int e : g.edges_into(v, i)) members.push_back(edge_path(g, e));
                if (!is_exhaustive(g, v, members).exhaustive) ok = false;
            }
            rep.add(pfx + "colour edges at listed vertices are exhaustive", ok,
                    count_note(static_cast<long>(kr.hjx.size()), "vertices"));
        }

        if (!preds.acyclic) {
            rep.skip(pfx + "splitting sums hold in the quotient",
                     "cyclic graph: quotient linear algebra unavailable");
            rep.skip(pfx + "compact expansions act like the generators",
                     "cyclic graph: quotient linear algebra unavailable");
            rep.skip(pfx + "covariance closes the loop",
                     "cyclic graph: quotient linear algebra unavailable");
            continue;
        }

        IdealBasis basis = ck_ideal(g);

        {
            bool ok = true;
            long checked = 0;
            std::string bad;
            for (int v : kr.hjx) {
                AlgebraElement sum = zero_element(g);
                for (int e : g.edges_into(v, i)) {
                    Path ep = edge_path(g, e);
                    sum = add(sum, monomial_element(g, ep, ep));
                }
                ++checked;
                if (!ck_equal(basis, vertex_element(g, v), sum)) {
                    ok = false;
                    bad = "vertex " + g.vertex_names[static_cast<size_t>(v)];
                }
            }
            for (const BTildeEntry& en : kr.entries) {
                std::vector<Path> pool = en.e;
                pool.insert(pool.end(), en.f.begin(), en.f.end());
                AlgebraElement lhs = delta(g, en.vertex, en.e);
                AlgebraElement rhs = zero_element(g);
                size_t esize = en.e.size();
                for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
                    if ((mask >> esize) == 0) continue;
                    std::vector<Path> sel;
                    int bits = 0;
                    for (size_t b = 0; b < pool.size(); ++b) {
                        if (mask & (1u << b)) {
                            sel.push_back(pool[b]);
                            ++bits;
                        }
                    }
                    Rational sign = (bits % 2 == 1) ? 1 : -1;
                    for (const Path& mu : mce_of_set(g, sel))
                        rhs = add(rhs, monomial_element(g, mu, mu, sign));
                }
                ++checked;
                if (!ck_equal(basis, lhs, rhs)) {
                    ok = false;
                    bad = "entry at " + g.vertex_names[static_cast<size_t>(en.vertex)];
                }
            }
            rep.add(pfx + "splitting sums hold in the quotient", ok,
                    ok ? count_note(checked, "identities") : bad);
        }

        {
            bool ok_act = true, ok_cov = true;
            long checked = 0;
            std::string bad_act, bad_cov;
            std::vector<std::pair<AlgebraElement, CompactOperatorSum>> aligned;
            for (size_t j = 0; j < kr.generators.size(); ++j)
                aligned.push_back({kr.generators[j], kr.expansions[j]});
            for (const BTildeEntry& en : kr.entries) {
                if (en.in_generator_list) continue;
                std::vector<Path> e_sub;
                for (const Path& p : en.e) e_sub.push_back(path_to_sub(ctx, p));
                int v_sub = ctx.sub.vertex_index(g.vertex_names[static_cast<size_t>(en.vertex)]);
                aligned.push_back({delta(ctx.sub, v_sub, e_sub),
                                   fe_compact_expansion(ctx, en.e, en.f)});
            }
            for (const auto& [gen, expansion] : aligned) {
                AlgebraElement lifted = phi_apply(ctx, gen, Level::toeplitz);
                for (const BimoduleElement& x : xg) {
                    ++checked;
                    AlgebraElement lhs = mul(g, lifted, x.value);
                    AlgebraElement rhs = apply_compact(ctx, expansion, x).value;
                    if (!ck_equal(basis, lhs, rhs)) {
                        ok_act = false;
                        bad_act = "mismatch on " + element_to_string(g, x.value);
                    }
                }
                AlgebraElement cp = zero_element(g);
                for (const ThetaTerm& t : expansion.terms)
                    cp = add(cp, scale(t.c, mul(g, t.x.value, adjoint(t.y.value))));
                if (!ck_equal(basis, cp, lifted)) {
                    ok_cov = false;
                    bad_cov = "expansion does not reassemble its generator";
                }
            }
            rep.add(pfx + "compact expansions act like the generators", ok_act,
                    ok_act ? count_note(checked, "(generator, x) pairs") : bad_act);
            rep.add(pfx + "covariance closes the loop", ok_cov,
                    ok_cov ? count_note(static_cast<long>(aligned.size()), "generators")
                           : bad_cov);
        }
    }
    return rep;
}

CheckReport run_appendix(const KGraph& g, const SuiteOptions& opt) {
    CheckReport rep;
    rep.title = "appendix";
    GraphPredicates preds = predicates(g);
    if (!preds.acyclic) {
        rep.skip("reduction certificates verify",
                 "cyclic graph: certificates require a finite path set");
        rep.skip("gap projections fall in the edge-level ideal",
                 "cyclic graph: certificates require a finite path set");
        return rep;
    }

    IdealBasis basis = ck_ideal(g);
    bool ok_verify = true, ok_ideal = true;
    long reduced = 0;
    long degenerate = 0;
    std::string bad_verify, bad_ideal;
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
        for (const FESet& fe : enumerate_fe_sets(g, v, natural_cap(g), opt.budget)) {
            if (l_value(g, fe.members) > 4) continue;
            ++reduced;
            ReductionCertificate cert = reduce(g, {}, fe, 6);
            try {
                verify_certificate(g, cert);
            } catch (const Error& err) {
                ok_verify = false;
                bad_verify = err.what();
            }
            for (const ReductionNode& node : cert.nodes)
                for (const ReductionBranch& br : node.branches)
                    if (br.degenerate) ++degenerate;
            if (!ideal_contains(basis, delta(g, v, fe.members))) {
                ok_ideal = false;
                bad_ideal = "gap projection escapes at " +
                            g.vertex_names[static_cast<size_t>(v)];
            }
        }
    }
    rep.add("reduction certificates verify", ok_verify,
            ok_verify ? count_note(reduced, "sets") + ", " +
                            count_note(degenerate, "degenerate branches")
                      : bad_verify);
    rep.add("gap projections fall in the edge-level ideal", ok_ideal,
            ok_ideal ? count_note(reduced, "sets") : bad_ideal);
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"combinatorics", "toeplitz", "bimodule",
                                                   "katsura", "appendix"};
    return names;
}

std::vector<CheckReport> run_suite(const KGraph& g, const std::string& name,
                                   const SuiteOptions& opt) {
    bool all = name == "all";
    std::vector<CheckReport> out;
    if (all || name == "combinatorics") out.push_back(run_combinatorics(g, opt));
    if (all || name == "toeplitz") out.push_back(run_toeplitz(g, opt));
    if (all || name == "bimodule") out.push_back(run_bimodule(g, opt));
    if (all || name == "katsura") out.push_back(run_katsura(g, opt));
    if (all || name == "appendix") out.push_back(run_appendix(g, opt));
    if (out.empty()) throw Error(errc::unknown_id, "unknown suite: " + name);
    return out;
}

}  // namespace kgraph
