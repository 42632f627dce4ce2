#include "kgraph/katsura.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "kgraph/errors.hpp"
#include "kgraph/ideal.hpp"

namespace kgraph {

namespace {

void require_locally_convex(const KGraph& g, const char* who) {
    if (!predicates(g).locally_convex)
        throw Error(errc::not_locally_convex, std::string(who) + " needs a locally convex graph");
}

BimoduleElement x_unit(const ColorContext& ctx, const Path& lambda) {
    Path s = vertex_path(ctx.full, source(ctx.full, lambda));
    return make_bimodule_element(ctx, lambda.deg[ctx.color - 1],
                                 monomial_element(ctx.full, lambda, s));
}

// subsets of pool by increasing size, lexicographic within a size
template <typename Fn>
void for_each_subset_ordered(const std::vector<int>& pool, std::uint64_t budget, Fn&& fn) {
    size_t n = pool.size();
    std::uint64_t tried = 0;
    for (size_t sz = 0; sz <= n; ++sz) {
        std::vector<size_t> idx(sz);
        for (size_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            if (++tried > budget)
                throw Error(errc::budget_exceeded, "subset search exceeded budget");
            std::vector<int> pick;
            pick.reserve(sz);
            for (size_t i : idx) pick.push_back(pool[i]);
            if (fn(pick)) return;
            // advance the combination
            size_t j = sz;
            while (j > 0 && idx[j - 1] == n - sz + j - 1) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (size_t i = j; i < sz; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
}

}  // namespace

BimoduleElement apply_compact(const ColorContext& ctx, const CompactOperatorSum& sum,
                              const BimoduleElement& z) {
    AlgebraElement acc = zero_element(ctx.full);
    for (const ThetaTerm& t : sum.terms) {
        BimoduleElement moved = act_right(ctx, t.x, inner_product(ctx, t.y, z));
        acc = add(acc, scale(t.c, moved.value));
    }
    int n = sum.terms.empty() ? z.n : sum.terms.front().x.n;
    return make_bimodule_element(ctx, n, acc);
}

std::vector<int> ker_psi_vertices(const ColorContext& ctx) {
    require_locally_convex(ctx.full, "ker_psi_vertices");
    std::vector<int> out;
    for (int v = 0; v < ctx.full.vertex_count(); ++v)
        if (ctx.full.edges_into(v, ctx.color).empty()) out.push_back(v);
    return out;
}

std::vector<int> h_jx(const ColorContext& ctx) {
    require_locally_convex(ctx.full, "h_jx");
    std::vector<int> out;
    for (int v = 0; v < ctx.full.vertex_count(); ++v)
        if (!ctx.full.edges_into(v, ctx.color).empty()) out.push_back(v);
    return out;
}

std::vector<BTildeEntry> b_tilde(const ColorContext& ctx, std::uint64_t budget) {
    require_locally_convex(ctx.full, "b_tilde");
    std::set<std::string> h;
    for (int v : h_jx(ctx)) h.insert(ctx.full.vertex_names[v]);
    KGraph restricted = restrict_to_complement(ctx.sub, h);

    std::vector<BTildeEntry> out;
    for (int rv = 0; rv < restricted.vertex_count(); ++rv) {
        int full_v = ctx.full.vertex_index(restricted.vertex_names[rv]);
        std::vector<int> pool = ctx.full.edges_into(full_v, ctx.color);
        std::sort(pool.begin(), pool.end());
        for (const FESet& fe : enumerate_edge_fe_sets(restricted, rv, budget)) {
            BTildeEntry entry;
            entry.vertex = full_v;
            for (const Path& p : fe.members) {
                int fe_edge = ctx.full.edge_index(restricted.edge_names[p.word[0]]);
                entry.e.push_back(edge_path(ctx.full, fe_edge));
            }
            entry.in_generator_list = !pool.empty();

            bool found = false;
            for_each_subset_ordered(pool, budget, [&](const std::vector<int>& pick) {
                std::vector<Path> joint = entry.e;
                std::vector<Path> fpaths;
                for (int e : pick) fpaths.push_back(edge_path(ctx.full, e));
                joint.insert(joint.end(), fpaths.begin(), fpaths.end());
                if (!is_exhaustive(ctx.full, full_v, joint).exhaustive) return false;
                entry.f = fpaths;
                found = true;
                return true;
            });
            if (found) out.push_back(std::move(entry));
        }
    }
    return out;
}

CompactOperatorSum vertex_compact_expansion(const ColorContext& ctx, int v) {
    CompactOperatorSum sum;
    for (int e : ctx.full.edges_into(v, ctx.color)) {
        ThetaTerm t;
        t.x = x_unit(ctx, edge_path(ctx.full, e));
        t.y = t.x;
        t.c = 1;
        sum.terms.push_back(std::move(t));
    }
    return sum;
}

CompactOperatorSum fe_compact_expansion(const ColorContext& ctx, const std::vector<Path>& e,
                                        const std::vector<Path>& f) {
    if (e.empty())
        throw Error(errc::precondition_violated, "E must be a nonempty exhaustive set");
    int v = e.front().v;
    for (const Path& p : e) {
        if (p.word.size() != 1 || ctx.full.edges[p.word[0]].color == ctx.color || p.v != v)
            throw Error(errc::precondition_violated,
                        "E must consist of edges at one vertex avoiding color " +
                            std::to_string(ctx.color));
    }
    for (const Path& p : f) {
        if (p.word.size() != 1 || ctx.full.edges[p.word[0]].color != ctx.color || p.v != v)
            throw Error(errc::precondition_violated,
                        "F must consist of color-" + std::to_string(ctx.color) +
                            " edges at the same vertex");
    }
    std::vector<Path> joint = e;
    joint.insert(joint.end(), f.begin(), f.end());
    if (!is_exhaustive(ctx.full, v, joint).exhaustive)
        throw Error(errc::precondition_violated, "E and F together must be exhaustive");
    if (joint.size() >= 63)
        throw Error(errc::budget_exceeded, "subset expansion needs |E u F| < 63");

    std::map<Path, Rational> coeffs;
    size_t total = joint.size();
    size_t esize = e.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
        if ((mask >> esize) == 0) continue;  // G must meet F
        std::vector<Path> g;
        for (size_t i = 0; i < total; ++i)
            if (mask & (std::uint64_t{1} << i)) g.push_back(joint[i]);
        int sign = (g.size() % 2 == 0) ? -1 : 1;  // (-1)^{|G|+1}
        for (const Path& mu : mce_of_set(ctx.full, g)) {
            if (mu.deg[ctx.color - 1] != 1)
                throw Error(errc::closed_form_disagreement,
                            "MCE " + path_to_string(ctx.full, mu) + " has color-" +
                                std::to_string(ctx.color) + " degree != 1");
            coeffs[mu] += sign;
        }
    }

    CompactOperatorSum sum;
    for (const auto& [mu, c] : coeffs) {
        if (c == 0) continue;
        ThetaTerm t;
        t.x = x_unit(ctx, mu);
        t.y = t.x;
        t.c = c;
        sum.terms.push_back(std::move(t));
    }
    return sum;
}

KatsuraReport katsura_report(const ColorContext& ctx, std::uint64_t budget) {
    require_locally_convex(ctx.full, "katsura_report");
    KatsuraReport rep;
    rep.color = ctx.color;
    rep.ker = ker_psi_vertices(ctx);
    rep.hjx = h_jx(ctx);
    rep.entries = b_tilde(ctx, budget);

    for (int v : rep.hjx) {
        rep.generators.push_back(vertex_element(ctx.sub, v));
        rep.expansions.push_back(vertex_compact_expansion(ctx, v));
    }
    for (const BTildeEntry& entry : rep.entries) {
        if (!entry.in_generator_list) continue;
        std::vector<Path> e_sub;
        for (const Path& p : entry.e) e_sub.push_back(path_to_sub(ctx, p));
        rep.generators.push_back(delta(ctx.sub, entry.vertex, e_sub));
        rep.expansions.push_back(fe_compact_expansion(ctx, entry.e, entry.f));
    }

    bool homogeneous = true;
    for (const AlgebraElement& gen : rep.generators)
        if (spectral_decompose(gen).size() > 1) homogeneous = false;
    rep.notes.push_back(std::string("generators grading-homogeneous: ") +
                        (homogeneous ? "yes" : "no"));
    rep.notes.push_back(
        "finite graph: every vertex receives finitely many color-" + std::to_string(ctx.color) +
        " edges, so the infinite-receiver branch is not representable");

    if (predicates(ctx.sub).acyclic && !rep.generators.empty()) {
        IdealBasis span = ideal_from_generators(ctx.sub, rep.generators);
        bool closed = true;
        std::vector<Monomial> monos = all_monomials(ctx.sub, natural_cap(ctx.sub));
        for (const AlgebraElement& gen : rep.generators) {
            for (const Monomial& m : monos) {
                AlgebraElement me = monomial_element(ctx.sub, m.lambda, m.mu);
                if (!ideal_contains(span, mul(ctx.sub, me, gen)) ||
                    !ideal_contains(span, mul(ctx.sub, gen, me)))
                    closed = false;
            }
        }
        rep.notes.push_back(std::string("generator span closed under monomial multiples: ") +
                            (closed ? "yes" : "no"));
    }
    return rep;
}

}  // namespace kgraph
