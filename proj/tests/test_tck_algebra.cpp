#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "kgraph/algebra.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ideal.hpp"
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

AlgebraElement mono(const KGraph& g, const Path& l, const Path& m) {
    return monomial_element(g, l, m);
}

}  // namespace

TEST_CASE("vertex projections multiply like deltas") {
    KGraph r = support::load_fixture("remark.kg");
    AlgebraElement pv = vertex_element(r, r.vertex_index("v"));
    AlgebraElement pa = vertex_element(r, r.vertex_index("a"));

    CHECK(mul(r, pv, pv) == pv);
    CHECK(mul(r, pv, pa).is_zero());
    CHECK(mul(r, pa, pv).is_zero());
    CHECK(adjoint(pv) == pv);
}

TEST_CASE("products follow minimal common extensions") {
    KGraph r = support::load_fixture("remark.kg");
    Path lam = path_of(r, {"lam"});
    Path mu = path_of(r, {"mu"});

    // lam and mu have no common extension, so q_lam* q_mu = 0
    AlgebraElement lam_star = mono(r, vpath(r, "a"), lam);
    AlgebraElement mu_elem = mono(r, mu, vpath(r, "b"));
    CHECK(mul(r, lam_star, mu_elem).is_zero());

    KGraph q = support::load_fixture("square.kg");
    Path f1 = path_of(q, {"f1"});
    Path g1 = path_of(q, {"g1"});
    Path diag = path_of(q, {"f1", "g2"});

    // (f1,f1)(g1,g1) picks up the unique square completion
    AlgebraElement prod = mul(q, mono(q, f1, f1), mono(q, g1, g1));
    CHECK(prod == mono(q, diag, diag));

    // composing the isometries walks down the square
    AlgebraElement step = mul(q, mono(q, f1, vpath(q, "B")), mono(q, path_of(q, {"g2"}), vpath(q, "D")));
    CHECK(step == mono(q, diag, vpath(q, "D")));
}

TEST_CASE("same-degree isometries with distinct ranges are orthogonal") {
    KGraph line = support::load_fixture("line_k1.kg");
    Path e1 = path_of(line, {"e1"});
    Path f1 = path_of(line, {"f1"});

    AlgebraElement e1_star = adjoint(mono(line, e1, vpath(line, "v1")));
    AlgebraElement f1_elem = mono(line, f1, vpath(line, "v1"));
    CHECK(mul(line, e1_star, f1_elem).is_zero());
    CHECK(mul(line, e1_star, mono(line, e1, vpath(line, "v1"))) ==
          vertex_element(line, line.vertex_index("v1")));
}

TEST_CASE("adjoint reverses products") {
    KGraph q = support::load_fixture("square.kg");
    Path f1 = path_of(q, {"f1"});
    Path g1 = path_of(q, {"g1"});

    AlgebraElement a = add(mono(q, f1, f1), scale(Rational(2), vertex_element(q, q.vertex_index("A"))));
    AlgebraElement b = sub(mono(q, g1, g1), vertex_element(q, q.vertex_index("A")));
    CHECK(adjoint(mul(q, a, b)) == mul(q, adjoint(b), adjoint(a)));
    CHECK(adjoint(adjoint(a)) == a);
}

TEST_CASE("monomials require matching sources") {
    KGraph r = support::load_fixture("remark.kg");
    Path lam = path_of(r, {"lam"});
    CHECK_THROWS_AS((void)make_monomial(r, lam, vpath(r, "v")), Error);
    try {
        (void)make_monomial(r, lam, vpath(r, "v"));
    } catch (const Error& e) {
        CHECK(e.code == errc::not_composable);
    }
}

TEST_CASE("gap projections expand over subsets") {
    KGraph r = support::load_fixture("remark.kg");
    int v = r.vertex_index("v");
    Path lam = path_of(r, {"lam"});
    Path mu = path_of(r, {"mu"});

    AlgebraElement one_edge = delta(r, v, {lam});
    CHECK(one_edge == sub(vertex_element(r, v), mono(r, lam, lam)));

    // lam and mu never meet, so the inclusion-exclusion cross term drops out
    AlgebraElement both = delta(r, v, {lam, mu});
    AlgebraElement expect = sub(sub(vertex_element(r, v), mono(r, lam, lam)), mono(r, mu, mu));
    CHECK(both == expect);

    KGraph q = support::load_fixture("square.kg");
    int a = q.vertex_index("A");
    Path f1 = path_of(q, {"f1"});
    Path g1 = path_of(q, {"g1"});
    Path diag = path_of(q, {"f1", "g2"});

    AlgebraElement gap = delta(q, a, {f1, g1});
    AlgebraElement want = add(sub(sub(vertex_element(q, a), mono(q, f1, f1)), mono(q, g1, g1)),
                              mono(q, diag, diag));
    CHECK(gap == want);

    // the set has to sit at the stated vertex
    CHECK_THROWS_AS((void)delta(q, q.vertex_index("B"), {f1}), Error);
}

TEST_CASE("spectral decomposition grades by degree difference") {
    KGraph r = support::load_fixture("remark.kg");
    Path lam = path_of(r, {"lam"});
    AlgebraElement x = add(mono(r, lam, vpath(r, "a")), vertex_element(r, r.vertex_index("v")));

    auto parts = spectral_decompose(x);
    CHECK(parts.size() == 2);
    CHECK(parts.count(Degree{0, 0}) == 1);
    CHECK(parts.count(Degree{1, 0}) == 1);
    CHECK(parts[Degree{1, 0}] == mono(r, lam, vpath(r, "a")));

    AlgebraElement back = zero_element(r);
    for (const auto& [grade, part] : parts) back = add(back, part);
    CHECK(back == x);

    CHECK(spectral_decompose(zero_element(r)).empty());
}

TEST_CASE("monomial bases count composable pairs") {
    KGraph r = support::load_fixture("remark.kg");
    CHECK(all_monomials(r, natural_cap(r)).size() == 9);

    KGraph q = support::load_fixture("square.kg");
    CHECK(all_monomials(q, natural_cap(q)).size() == 25);

    // every listed monomial has source-matched paths
    for (const Monomial& m : all_monomials(q, natural_cap(q)))
        CHECK(source(q, m.lambda) == source(q, m.mu));
}

TEST_CASE("relation ideal on the two-arrow fixture") {
    KGraph r = support::load_fixture("remark.kg");
    int v = r.vertex_index("v");
    Path lam = path_of(r, {"lam"});
    Path mu = path_of(r, {"mu"});

    IdealBasis basis = ck_ideal(r);
    CHECK(basis.dimension() == 1);

    AlgebraElement gen = sub(sub(vertex_element(r, v), mono(r, lam, lam)), mono(r, mu, mu));
    CHECK(ideal_contains(basis, gen));
    CHECK(!ideal_contains(basis, mono(r, mu, mu)));
    CHECK(!ideal_contains(basis, vertex_element(r, v)));
    CHECK(ck_equal(basis, vertex_element(r, v), add(mono(r, lam, lam), mono(r, mu, mu))));
}

TEST_CASE("relation ideal on the single-square fixture") {
    KGraph q = support::load_fixture("square.kg");
    IdealBasis basis = ck_ideal(q);

    // the quotient collapses onto matrix units over the four maximal paths,
    // so 25 monomials less a 16-dimensional image leaves rank 9
    CHECK(basis.dimension() == 9);

    int a = q.vertex_index("A");
    Path f1 = path_of(q, {"f1"});
    Path g1 = path_of(q, {"g1"});
    for (const FESet& fe : enumerate_edge_fe_sets(q, a))
        CHECK(ideal_contains(basis, delta(q, a, fe.members)));

    CHECK(ck_equal(basis, mono(q, f1, f1), mono(q, g1, g1)));
    CHECK(ck_equal(basis, vertex_element(q, a), mono(q, f1, f1)));
    Path diag = path_of(q, {"f1", "g2"});
    CHECK(ck_equal(basis, vertex_element(q, a), mono(q, diag, diag)));
    CHECK(!ideal_contains(basis, vertex_element(q, a)));
}

TEST_CASE("ideals reject elements from other graphs") {
    KGraph r = support::load_fixture("remark.kg");
    KGraph q = support::load_fixture("square.kg");
    IdealBasis basis = ck_ideal(r);
    CHECK_THROWS_AS((void)ideal_contains(basis, vertex_element(q, 0)), Error);
}

TEST_CASE("ideal bases stay closed under their generators' products") {
    KGraph q = support::load_fixture("square.kg");
    IdealBasis basis = ck_ideal(q);
    std::vector<Monomial> monos = all_monomials(q, natural_cap(q));

    for (const auto& [pivot, row] : basis.rows) {
        (void)pivot;
        AlgebraElement elem = from_vec(q, *basis.index, row);
        CHECK(ideal_contains(basis, adjoint(elem)));
        for (const Monomial& m : monos) {
            AlgebraElement factor = monomial_element(q, m.lambda, m.mu);
            CHECK(ideal_contains(basis, mul(q, factor, elem)));
            CHECK(ideal_contains(basis, mul(q, elem, factor)));
        }
    }
}

TEST_CASE("elements print and serialize readably") {
    KGraph r = support::load_fixture("remark.kg");
    Path lam = path_of(r, {"lam"});

    CHECK(element_to_string(r, zero_element(r)) == "0");
    CHECK(element_to_string(r, monomial_element(r, lam, lam)) == "(lam, lam)");
    CHECK(element_to_string(r, monomial_element(r, lam, lam, Rational(-3) / 2)) ==
          "-3/2 (lam, lam)");

    AlgebraElement diff = sub(vertex_element(r, r.vertex_index("v")), monomial_element(r, lam, lam));
    CHECK(element_to_string(r, diff) == "(v, v) - (lam, lam)");

    std::string js = element_to_json(r, monomial_element(r, lam, vpath(r, "a")));
    CHECK(js.find("\"lambda\":\"lam\"") != std::string::npos);
    CHECK(js.find("\"coeff\":\"1\"") != std::string::npos);
}
