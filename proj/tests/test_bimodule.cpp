#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "kgraph/algebra.hpp"
#include "kgraph/bimodule.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

#include "support.hpp"

using namespace kgraph;

namespace {

Path path_of(const KGraph& g, const std::vector<std::string>& edge_ids) {
    std::vector<int> word;
    for (const std::string& id : edge_ids) word.push_back(g.edge_index(id));
    return make_path(g, g.edges[word.front()].dst, word);
}

Path vpath(const KGraph& g, const std::string& name) {
    return vertex_path(g, g.vertex_index(name));
}

BimoduleElement gen_of(const ColorContext& ctx, int n, const std::vector<std::string>& lam,
                       const std::string& mu_vertex_or_edge) {
    Path l = path_of(ctx.full, lam);
    Path m = ctx.full.edge_index(mu_vertex_or_edge) >= 0
                 ? path_of(ctx.full, {mu_vertex_or_edge})
                 : vpath(ctx.full, mu_vertex_or_edge);
    return make_bimodule_element(ctx, n, monomial_element(ctx.full, l, m));
}

std::set<std::string> gen_strings(const ColorContext& ctx, const std::vector<BimoduleElement>& xs) {
    std::set<std::string> out;
    for (const BimoduleElement& x : xs) out.insert(element_to_string(ctx.full, x.value));
    return out;
}

}  // namespace

TEST_CASE("colour contexts track the deleted colour") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    CHECK(ctx.sub.k == 1);
    CHECK(ctx.sub.edge_count() == 2);
    CHECK(ctx.sub.edge_index("g1") >= 0);
    CHECK(ctx.sub.edge_index("g2") >= 0);
    CHECK(ctx.edge_to_sub[static_cast<size_t>(q.edge_index("f1"))] == -1);
    int g2_full = q.edge_index("g2");
    CHECK(ctx.edge_from_sub[static_cast<size_t>(ctx.edge_to_sub[static_cast<size_t>(g2_full)])] ==
          g2_full);

    Path sub_g2 = path_of(ctx.sub, {"g2"});
    CHECK(path_to_sub(ctx, path_from_sub(ctx, sub_g2)) == sub_g2);

    ColorContext other = make_color_context(q, 2);
    CHECK(other.sub.edge_index("f1") >= 0);
    CHECK_THROWS_AS((void)make_color_context(q, 3), Error);
}

TEST_CASE("the degree-zero embedding relabels monomials") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    AlgebraElement sub_vertex = vertex_element(ctx.sub, ctx.sub.vertex_index("A"));
    CHECK(phi_apply(ctx, sub_vertex) == vertex_element(q, q.vertex_index("A")));

    Path sub_g1 = path_of(ctx.sub, {"g1"});
    AlgebraElement sub_mono = monomial_element(ctx.sub, sub_g1, sub_g1);
    AlgebraElement full_mono = monomial_element(q, path_of(q, {"g1"}), path_of(q, {"g1"}));
    CHECK(phi_apply(ctx, sub_mono) == full_mono);
    CHECK(phi_inverse(ctx, phi_apply(ctx, sub_mono)) == sub_mono);

    // a colour-1 monomial is not in the image
    AlgebraElement off = monomial_element(q, path_of(q, {"f1"}), path_of(q, {"f1"}));
    CHECK_THROWS_AS((void)phi_inverse(ctx, off), Error);
    try {
        (void)phi_inverse(ctx, off);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_in_phi_image);
    }
    CHECK_THROWS_AS((void)phi_apply(ctx, full_mono), Error);
}

TEST_CASE("the embedding only reaches the quotient level when locally convex") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext qctx = make_color_context(q, 1);
    AlgebraElement a = vertex_element(qctx.sub, 0);
    CHECK(!phi_apply(qctx, a, Level::ck).is_zero());

    KGraph r = support::load_fixture("remark.kg");
    ColorContext rctx = make_color_context(r, 1);
    AlgebraElement b = vertex_element(rctx.sub, 0);
    CHECK(!phi_apply(rctx, b, Level::toeplitz).is_zero());
    try {
        (void)phi_apply(rctx, b, Level::ck);
        FAIL("expected a refusal");
    } catch (const Error& e) {
        CHECK(e.code == errc::not_locally_convex);
    }
}

TEST_CASE("module elements must be homogeneous") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);
    Path f1 = path_of(q, {"f1"});

    BimoduleElement ok = make_bimodule_element(ctx, 1, monomial_element(q, f1, vpath(q, "B")));
    CHECK(ok.n == 1);
    CHECK_THROWS_AS((void)make_bimodule_element(ctx, 2, monomial_element(q, f1, vpath(q, "B"))),
                    Error);
    // mu must be colour-free
    CHECK_THROWS_AS((void)make_bimodule_element(ctx, 1, monomial_element(q, f1, f1)), Error);
}

TEST_CASE("module generators on the single-square fixture") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    std::set<std::string> got = gen_strings(ctx, x_generators(ctx, 1, natural_cap(q)));
    std::set<std::string> want = {"(f1, B)", "(f2, D)", "(f2, g2)", "(f1.g2, D)", "(f1.g2, g2)"};
    CHECK(got == want);

    // no colour-1 path has length two here, so X_2 has no generators
    CHECK(x_generators(ctx, 2, natural_cap(q)).empty());
}

TEST_CASE("inner products match the hand computation") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    BimoduleElement xf1 = gen_of(ctx, 1, {"f1"}, "B");
    BimoduleElement xf2 = gen_of(ctx, 1, {"f2"}, "D");
    BimoduleElement xf2g2 = gen_of(ctx, 1, {"f2"}, "g2");

    CHECK(inner_product(ctx, xf1, xf1) == vertex_element(ctx.sub, ctx.sub.vertex_index("B")));
    CHECK(inner_product(ctx, xf1, xf2).is_zero());

    Path sub_g2 = path_of(ctx.sub, {"g2"});
    CHECK(inner_product(ctx, xf2, xf2g2) ==
          monomial_element(ctx.sub, vertex_path(ctx.sub, ctx.sub.vertex_index("D")), sub_g2));
    CHECK(inner_product(ctx, xf2g2, xf2g2) == monomial_element(ctx.sub, sub_g2, sub_g2));

    // right action pulls out of the second slot
    AlgebraElement a = monomial_element(ctx.sub, sub_g2, sub_g2);
    CHECK(inner_product(ctx, xf1, act_right(ctx, xf1, a)) ==
          mul(ctx.sub, inner_product(ctx, xf1, xf1), a));
}

TEST_CASE("left action is adjointable on the hand examples") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    BimoduleElement xf1 = gen_of(ctx, 1, {"f1"}, "B");
    AlgebraElement pa = vertex_element(ctx.sub, ctx.sub.vertex_index("A"));
    AlgebraElement pb = vertex_element(ctx.sub, ctx.sub.vertex_index("B"));
    CHECK(act_left(ctx, pa, xf1).value == xf1.value);
    CHECK(act_left(ctx, pb, xf1).value.is_zero());

    Path sub_g1 = path_of(ctx.sub, {"g1"});
    AlgebraElement a = monomial_element(ctx.sub, sub_g1, sub_g1);
    BimoduleElement moved = act_left(ctx, a, xf1);
    CHECK(moved.value == monomial_element(q, path_of(q, {"f1", "g2"}), path_of(q, {"g2"})));

    std::vector<BimoduleElement> gens = x_generators(ctx, 1, natural_cap(q));
    for (const BimoduleElement& x : gens)
        for (const BimoduleElement& y : gens)
            CHECK(inner_product(ctx, act_left(ctx, adjoint(a), x), y) ==
                  inner_product(ctx, x, act_left(ctx, a, y)));
}

TEST_CASE("tensor powers factor through the balanced relation") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);

    BimoduleElement xf1 = gen_of(ctx, 1, {"f1"}, "B");
    TensorElement t1 = omega(ctx, 1, xf1.value.terms.begin()->first);
    CHECK(t1.len == 1);
    CHECK(t1.terms.size() == 1);

    BimoduleElement xf2 = gen_of(ctx, 1, {"f2"}, "D");
    TensorElement t2 = omega(ctx, 1, xf2.value.terms.begin()->first);
    CHECK(tensor_inner_product(ctx, t1, t2) == inner_product(ctx, xf1, xf2));
    CHECK(tensor_inner_product(ctx, t1, t1) == inner_product(ctx, xf1, xf1));

    // degree-zero monomials land in the scalar slot
    Path g1 = path_of(q, {"g1"});
    TensorElement t0 = omega(ctx, 0, make_monomial(q, g1, g1));
    CHECK(t0.len == 0);
    CHECK(t0.scalar == monomial_element(ctx.sub, path_of(ctx.sub, {"g1"}), path_of(ctx.sub, {"g1"})));

    CHECK(verify_omega_multiplicativity(ctx, 0, 1, natural_cap(q)).all_pass());
    CHECK(verify_omega_multiplicativity(ctx, 1, 0, natural_cap(q)).all_pass());
}

TEST_CASE("tensor factorisation on genuinely stacked paths") {
    KGraph ladder = support::load_fixture("ladder.kg");
    ColorContext ctx = make_color_context(ladder, 1);

    Degree cap = natural_cap(ladder);
    CHECK(!x_generators(ctx, 2, cap).empty());
    CheckReport rep = verify_omega_multiplicativity(ctx, 1, 1, cap);
    CHECK(rep.all_pass());

    for (const BimoduleElement& x : x_generators(ctx, 2, cap)) {
        const Monomial& m = x.value.terms.begin()->first;
        TensorElement t = omega(ctx, 2, m);
        CHECK(t.len == 2);
        CHECK(tensor_inner_product(ctx, t, t) == inner_product(ctx, x, x));
    }
}

TEST_CASE("representation axioms hold on the fixtures") {
    KGraph q = support::load_fixture("square.kg");
    for (int i = 1; i <= 2; ++i) {
        ColorContext ctx = make_color_context(q, i);
        CHECK(check_toeplitz_axioms(ctx, Level::toeplitz).all_pass());
        CHECK(check_toeplitz_axioms(ctx, Level::ck).all_pass());
    }

    KGraph r = support::load_fixture("remark.kg");
    ColorContext rctx = make_color_context(r, 1);
    CHECK(check_toeplitz_axioms(rctx, Level::toeplitz).all_pass());
    CHECK_THROWS_AS((void)check_toeplitz_axioms(rctx, Level::ck), Error);
}

TEST_CASE("corner membership is decided and recorded") {
    KGraph q = support::load_fixture("square.kg");
    ColorContext ctx = make_color_context(q, 1);
    // every x y* over the generators reduces to a vertex projection modulo
    // the relation ideal, so the corner absorbs all of them
    CHECK(xxstar_in_phi_image(ctx));

    KGraph r = support::load_fixture("remark.kg");
    try {
        (void)xxstar_in_phi_image(make_color_context(r, 1));
        FAIL("expected a refusal");
    } catch (const Error& e) {
        CHECK(e.code == errc::not_locally_convex);
    }

    KGraph c = support::load_fixture("cuntz_2.kg");
    try {
        (void)xxstar_in_phi_image(make_color_context(c, 1));
        FAIL("expected a refusal");
    } catch (const Error& e) {
        CHECK(e.code == errc::not_acyclic);
    }
}

TEST_CASE("one colour collapses to the classical picture") {
    KGraph line = support::load_fixture("line_k1.kg");
    ColorContext ctx = make_color_context(line, 1);
    CHECK(ctx.sub.k == 0);
    CHECK(ctx.sub.edge_count() == 0);

    std::vector<BimoduleElement> gens = x_generators(ctx, 1, natural_cap(line));
    CHECK(gens.size() == 3);

    BimoduleElement e1 = gen_of(ctx, 1, {"e1"}, "v1");
    BimoduleElement f1 = gen_of(ctx, 1, {"f1"}, "v1");
    BimoduleElement e2 = gen_of(ctx, 1, {"e2"}, "v2");

    // distinct edges are orthogonal and each squares to its source vertex
    CHECK(inner_product(ctx, e1, f1).is_zero());
    CHECK(inner_product(ctx, e1, e2).is_zero());
    CHECK(inner_product(ctx, e1, e1) == vertex_element(ctx.sub, ctx.sub.vertex_index("v1")));
    CHECK(inner_product(ctx, e2, e2) == vertex_element(ctx.sub, ctx.sub.vertex_index("v2")));

    AlgebraElement pv0 = vertex_element(ctx.sub, ctx.sub.vertex_index("v0"));
    CHECK(act_left(ctx, pv0, e1).value == e1.value);
    CHECK(act_left(ctx, pv0, e2).value.is_zero());

    CHECK(check_toeplitz_axioms(ctx, Level::toeplitz).all_pass());
}
