#include "kgraph/bimodule.hpp"

#include <optional>
#include <string>
#include <utility>

#include "kgraph/errors.hpp"
#include "kgraph/ideal.hpp"

namespace kgraph {

namespace {

BimoduleElement unit_bim(const ColorContext& ctx, const Monomial& m) {
    BimoduleElement x;
    x.n = m.lambda.deg[ctx.color - 1];
    x.value = monomial_element(ctx.full, m.lambda, m.mu);
    return x;
}

}  // namespace

ColorContext make_color_context(const KGraph& g, int color) {
    if (color < 1 || color > g.k)
        throw Error(errc::degree_out_of_range,
                    "color " + std::to_string(color) + " out of range for k=" + std::to_string(g.k));
    ColorContext ctx;
    ctx.full = g;
    ctx.color = color;
    ctx.sub = remove_color(g, color);
    ctx.edge_to_sub.assign(g.edges.size(), -1);
    ctx.edge_from_sub.assign(ctx.sub.edges.size(), -1);
    for (int je = 0; je < ctx.sub.edge_count(); ++je) {
        int fe = g.edge_index(ctx.sub.edge_names[je]);
        ctx.edge_to_sub[fe] = je;
        ctx.edge_from_sub[je] = fe;
    }
    return ctx;
}

Path path_to_sub(const ColorContext& ctx, const Path& p) {
    if (p.deg[ctx.color - 1] != 0)
        throw Error(errc::not_in_phi_image,
                    "path " + path_to_string(ctx.full, p) + " uses color " + std::to_string(ctx.color));
    std::vector<int> word;
    word.reserve(p.word.size());
    for (int e : p.word) word.push_back(ctx.edge_to_sub[e]);
    return make_path(ctx.sub, p.v, word);
}

Path path_from_sub(const ColorContext& ctx, const Path& p) {
    std::vector<int> word;
    word.reserve(p.word.size());
    for (int e : p.word) word.push_back(ctx.edge_from_sub[e]);
    return make_path(ctx.full, p.v, word);
}

AlgebraElement phi_apply(const ColorContext& ctx, const AlgebraElement& a, Level level) {
    if (a.graph_uid != ctx.sub.uid)
        throw Error(errc::graph_mismatch, "phi_apply expects an element of the color-deleted algebra");
    if (level == Level::ck && !predicates(ctx.full).locally_convex)
        throw Error(errc::not_locally_convex,
                    "phi only descends to the CK quotient for locally convex graphs");
    AlgebraElement out = zero_element(ctx.full);
    for (const auto& [m, c] : a.terms) {
        Monomial fm = make_monomial(ctx.full, path_from_sub(ctx, m.lambda), path_from_sub(ctx, m.mu));
        out.terms[fm] = c;
    }
    return out;
}

AlgebraElement phi_inverse(const ColorContext& ctx, const AlgebraElement& a) {
    if (a.graph_uid != ctx.full.uid)
        throw Error(errc::graph_mismatch, "phi_inverse expects an element of the full algebra");
    AlgebraElement out = zero_element(ctx.sub);
    for (const auto& [m, c] : a.terms) {
        if (m.lambda.deg[ctx.color - 1] != 0 || m.mu.deg[ctx.color - 1] != 0)
            throw Error(errc::not_in_phi_image,
                        "(" + path_to_string(ctx.full, m.lambda) + ", " +
                            path_to_string(ctx.full, m.mu) + ") has nonzero degree in color " +
                            std::to_string(ctx.color));
        Monomial sm = make_monomial(ctx.sub, path_to_sub(ctx, m.lambda), path_to_sub(ctx, m.mu));
        out.terms[sm] = c;
    }
    return out;
}

BimoduleElement make_bimodule_element(const ColorContext& ctx, int n, const AlgebraElement& value) {
    if (value.graph_uid != ctx.full.uid)
        throw Error(errc::graph_mismatch, "bimodule elements live over the full graph");
    for (const auto& [m, c] : value.terms) {
        (void)c;
        if (m.lambda.deg[ctx.color - 1] != n || m.mu.deg[ctx.color - 1] != 0)
            throw Error(errc::degree_mismatch,
                        "(" + path_to_string(ctx.full, m.lambda) + ", " +
                            path_to_string(ctx.full, m.mu) + ") is not an X_" + std::to_string(n) +
                            " monomial in color " + std::to_string(ctx.color));
    }
    BimoduleElement x;
    x.n = n;
    x.value = value;
    return x;
}

std::vector<BimoduleElement> x_generators(const ColorContext& ctx, int n, const Degree& cap) {
    std::map<int, std::vector<Path>> lam_by_src;
    std::map<int, std::vector<Path>> mu_by_src;
    for (const Path& p : all_paths(ctx.full, cap)) {
        int s = source(ctx.full, p);
        if (s < 0) continue;
        if (p.deg[ctx.color - 1] == n) lam_by_src[s].push_back(p);
        if (p.deg[ctx.color - 1] == 0) mu_by_src[s].push_back(p);
    }
    std::vector<BimoduleElement> out;
    for (const auto& [s, lams] : lam_by_src) {
        auto it = mu_by_src.find(s);
        if (it == mu_by_src.end()) continue;
        for (const Path& lam : lams)
            for (const Path& mu : it->second)
                out.push_back(make_bimodule_element(ctx, n, monomial_element(ctx.full, lam, mu)));
    }
    return out;
}

BimoduleElement bim_add(const ColorContext& ctx, const BimoduleElement& x, const BimoduleElement& y) {
    if (x.n != y.n)
        throw Error(errc::mixed_degrees, "cannot add X_" + std::to_string(x.n) + " to X_" + std::to_string(y.n));
    return make_bimodule_element(ctx, x.n, add(x.value, y.value));
}

BimoduleElement bim_scale(const Rational& c, const BimoduleElement& x) {
    BimoduleElement out;
    out.n = x.n;
    out.value = scale(c, x.value);
    return out;
}

AlgebraElement inner_product(const ColorContext& ctx, const BimoduleElement& x,
                             const BimoduleElement& y) {
    if (x.n != y.n)
        throw Error(errc::mixed_degrees,
                    "inner product needs both arguments in the same X_n, got " +
                        std::to_string(x.n) + " and " + std::to_string(y.n));
    return phi_inverse(ctx, mul(ctx.full, adjoint(x.value), y.value));
}

BimoduleElement act_left(const ColorContext& ctx, const AlgebraElement& a, const BimoduleElement& x) {
    AlgebraElement fa = phi_apply(ctx, a, Level::toeplitz);
    return make_bimodule_element(ctx, x.n, mul(ctx.full, fa, x.value));
}

BimoduleElement act_right(const ColorContext& ctx, const BimoduleElement& x, const AlgebraElement& a) {
    AlgebraElement fa = phi_apply(ctx, a, Level::toeplitz);
    return make_bimodule_element(ctx, x.n, mul(ctx.full, x.value, fa));
}

TensorElement tensor_concat(const ColorContext& ctx, const TensorElement& s, const TensorElement& t) {
    if (s.graph_uid != ctx.full.uid || t.graph_uid != ctx.full.uid)
        throw Error(errc::graph_mismatch, "tensor factors live over different graphs");
    TensorElement out;
    out.graph_uid = ctx.full.uid;
    if (s.len == 0 && t.len == 0) {
        out.len = 0;
        out.scalar = mul(ctx.sub, s.scalar, t.scalar);
        return out;
    }
    if (s.len == 0) {
        // push the scalar into the first factor through the left action
        out.len = t.len;
        for (const auto& [tuple, c] : t.terms) {
            AlgebraElement moved = act_left(ctx, s.scalar, unit_bim(ctx, tuple[0])).value;
            for (const auto& [m, cm] : moved.terms) {
                std::vector<Monomial> key;
                key.reserve(tuple.size());
                key.push_back(m);
                key.insert(key.end(), tuple.begin() + 1, tuple.end());
                Rational& slot = out.terms[key];
                slot += c * cm;
                if (slot == 0) out.terms.erase(key);
            }
        }
        return out;
    }
    if (t.len == 0) {
        out.len = s.len;
        for (const auto& [tuple, c] : s.terms) {
            AlgebraElement moved = act_right(ctx, unit_bim(ctx, tuple.back()), t.scalar).value;
            for (const auto& [m, cm] : moved.terms) {
                std::vector<Monomial> key(tuple.begin(), tuple.end() - 1);
                key.push_back(m);
                Rational& slot = out.terms[key];
                slot += c * cm;
                if (slot == 0) out.terms.erase(key);
            }
        }
        return out;
    }
    out.len = s.len + t.len;
    for (const auto& [tu, cu] : s.terms) {
        for (const auto& [tw, cw] : t.terms) {
            std::vector<Monomial> key = tu;
            key.insert(key.end(), tw.begin(), tw.end());
            Rational& slot = out.terms[key];
            slot += cu * cw;
            if (slot == 0) out.terms.erase(key);
        }
    }
    return out;
}

TensorElement omega(const ColorContext& ctx, int n, const Monomial& mono) {
    if (mono.lambda.deg[ctx.color - 1] != n || mono.mu.deg[ctx.color - 1] != 0)
        throw Error(errc::degree_mismatch,
                    "omega_" + std::to_string(n) + " applied to (" +
                        path_to_string(ctx.full, mono.lambda) + ", " +
                        path_to_string(ctx.full, mono.mu) + ")");
    TensorElement out;
    out.graph_uid = ctx.full.uid;
    if (n == 0) {
        out.len = 0;
        out.scalar = phi_inverse(ctx, monomial_element(ctx.full, mono.lambda, mono.mu));
        return out;
    }
    std::vector<Monomial> tuple;
    tuple.reserve(static_cast<size_t>(n));
    Path rest = mono.lambda;
    for (int step = 0; step + 1 < n; ++step) {
        auto [head, tail] = factor(ctx.full, rest, unit_degree(ctx.full.k, ctx.color));
        tuple.push_back(make_monomial(ctx.full, head, vertex_path(ctx.full, source(ctx.full, head))));
        rest = tail;
    }
    tuple.push_back(make_monomial(ctx.full, rest, mono.mu));
    out.len = n;
    out.terms[tuple] = 1;
    return out;
}

namespace {

// <u[k:], w> with |w| = |u| - k, by moving <u[k], w[0]> across the tensor sign
AlgebraElement ip_tuples(const ColorContext& ctx, const std::vector<Monomial>& u, size_t k,
                         const std::vector<Monomial>& w) {
    AlgebraElement a = inner_product(ctx, unit_bim(ctx, u[k]), unit_bim(ctx, w[0]));
    if (k + 1 == u.size()) return a;
    AlgebraElement out = zero_element(ctx.sub);
    AlgebraElement moved = act_left(ctx, a, unit_bim(ctx, w[1])).value;
    for (const auto& [m, c] : moved.terms) {
        std::vector<Monomial> w2;
        w2.reserve(w.size() - 1);
        w2.push_back(m);
        w2.insert(w2.end(), w.begin() + 2, w.end());
        out = add(out, scale(c, ip_tuples(ctx, u, k + 1, w2)));
    }
    return out;
}

}  // namespace

AlgebraElement tensor_inner_product(const ColorContext& ctx, const TensorElement& s,
                                    const TensorElement& t) {
    if (s.graph_uid != ctx.full.uid || t.graph_uid != ctx.full.uid)
        throw Error(errc::graph_mismatch, "tensor factors live over different graphs");
    if (s.len != t.len)
        throw Error(errc::length_mismatch,
                    "tensor lengths " + std::to_string(s.len) + " and " + std::to_string(t.len));
    if (s.len == 0) return mul(ctx.sub, adjoint(s.scalar), t.scalar);
    AlgebraElement out = zero_element(ctx.sub);
    for (const auto& [tu, cu] : s.terms)
        for (const auto& [tw, cw] : t.terms)
            out = add(out, scale(cu * cw, ip_tuples(ctx, tu, 0, tw)));
    return out;
}

CheckReport verify_omega_multiplicativity(const ColorContext& ctx, int m, int n, const Degree& cap) {
    CheckReport rep;
    rep.title = "omega multiplicativity, m=" + std::to_string(m) + " n=" + std::to_string(n);
    std::vector<BimoduleElement> gens_m = x_generators(ctx, m, cap);
    std::vector<BimoduleElement> gens_n = x_generators(ctx, n, cap);
    std::vector<BimoduleElement> gens_mn = x_generators(ctx, m + n, cap);
    std::vector<TensorElement> omega_mn;
    omega_mn.reserve(gens_mn.size());
    for (const BimoduleElement& g : gens_mn)
        omega_mn.push_back(omega(ctx, m + n, g.value.terms.begin()->first));

    size_t checked = 0, failed = 0;
    std::string first;
    for (const BimoduleElement& x : gens_m) {
        TensorElement tx = omega(ctx, m, x.value.terms.begin()->first);
        for (const BimoduleElement& y : gens_n) {
            TensorElement ty = omega(ctx, n, y.value.terms.begin()->first);
            TensorElement txy = tensor_concat(ctx, tx, ty);
            BimoduleElement xy = make_bimodule_element(ctx, m + n, mul(ctx.full, x.value, y.value));
            for (size_t gi = 0; gi < gens_mn.size(); ++gi) {
                AlgebraElement lhs = tensor_inner_product(ctx, txy, omega_mn[gi]);
                AlgebraElement rhs = inner_product(ctx, xy, gens_mn[gi]);
                ++checked;
                if (lhs != rhs) {
                    ++failed;
                    if (first.empty())
                        first = "x=" + element_to_string(ctx.full, x.value) +
                                " y=" + element_to_string(ctx.full, y.value) +
                                " g=" + element_to_string(ctx.full, gens_mn[gi].value);
                }
            }
        }
    }
    rep.add("gram matrices agree (" + std::to_string(checked) + " comparisons)", failed == 0, first);
    return rep;
}

CheckReport check_toeplitz_axioms(const ColorContext& ctx, Level level) {
    const KGraph& g = ctx.full;
    GraphPredicates pred = predicates(g);
    if (level == Level::ck) {
        if (!pred.locally_convex)
            throw Error(errc::not_locally_convex, "CK-level axioms need a locally convex graph");
        if (!pred.acyclic)
            throw Error(errc::not_acyclic, "CK-level comparison needs an acyclic graph");
    }
    Degree cap = pred.acyclic ? natural_cap(g) : Degree(static_cast<size_t>(g.k), 2);
    std::optional<IdealBasis> ideal;
    if (level == Level::ck) ideal = ck_ideal(g);
    auto eq = [&](const AlgebraElement& a, const AlgebraElement& b) {
        return level == Level::toeplitz ? a == b : ck_equal(*ideal, a, b);
    };

    std::vector<BimoduleElement> xs = x_generators(ctx, 1, cap);
    std::vector<AlgebraElement> as;
    for (int v = 0; v < ctx.sub.vertex_count(); ++v) as.push_back(vertex_element(ctx.sub, v));
    for (int e = 0; e < ctx.sub.edge_count(); ++e) {
        Path pe = edge_path(ctx.sub, e);
        Path ps = vertex_path(ctx.sub, source(ctx.sub, pe));
        as.push_back(monomial_element(ctx.sub, pe, ps));
        as.push_back(monomial_element(ctx.sub, ps, pe));
    }

    CheckReport rep;
    rep.title = std::string("toeplitz axioms, ") +
                (level == Level::toeplitz ? "formal level" : "CK level");
    size_t f1 = 0, f2 = 0, f3 = 0;
    for (const AlgebraElement& a : as) {
        AlgebraElement fa = phi_apply(ctx, a, level);
        for (const BimoduleElement& x : xs) {
            if (!eq(act_right(ctx, x, a).value, mul(g, x.value, fa))) ++f1;
            if (!eq(act_left(ctx, a, x).value, mul(g, fa, x.value))) ++f2;
        }
    }
    for (const BimoduleElement& x : xs)
        for (const BimoduleElement& y : xs)
            if (!eq(phi_apply(ctx, inner_product(ctx, x, y), level), mul(g, adjoint(x.value), y.value)))
                ++f3;
    size_t pairs = as.size() * xs.size();
    rep.add("right action compatible (" + std::to_string(pairs) + " pairs)", f1 == 0);
    rep.add("left action compatible (" + std::to_string(pairs) + " pairs)", f2 == 0);
    rep.add("inner product realised (" + std::to_string(xs.size() * xs.size()) + " pairs)", f3 == 0);
    return rep;
}

bool xxstar_in_phi_image(const ColorContext& ctx) {
    GraphPredicates pred = predicates(ctx.full);
    if (!pred.locally_convex)
        throw Error(errc::not_locally_convex, "span comparison is only set up for locally convex graphs");
    if (!pred.acyclic)
        throw Error(errc::not_acyclic, "the monomial list is infinite on cyclic graphs");

    std::shared_ptr<const MonomialIndex> index = make_monomial_index(ctx.full);
    IdealBasis span;
    span.index = index;
    for (const Monomial& m : index->monomials) {
        if (m.lambda.deg[ctx.color - 1] != 0 || m.mu.deg[ctx.color - 1] != 0) continue;
        SparseVec v;
        v[index->index_of(m)] = 1;
        basis_insert(span, v);
    }
    IdealBasis ck = ck_ideal(ctx.full);
    for (const auto& [piv, row] : ck.rows) {
        (void)piv;
        basis_insert(span, row);
    }

    std::vector<BimoduleElement> xs = x_generators(ctx, 1, natural_cap(ctx.full));
    for (const BimoduleElement& x : xs)
        for (const BimoduleElement& y : xs) {
            AlgebraElement p = mul(ctx.full, x.value, adjoint(y.value));
            if (!reduce(span, to_vec(*index, p)).empty()) return false;
        }
    return true;
}

}  // namespace kgraph
