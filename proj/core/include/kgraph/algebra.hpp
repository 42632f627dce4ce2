#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"
#include "kgraph/rational.hpp"

namespace kgraph {

// q_lambda q_mu* with s(lambda) = s(mu)
struct Monomial {
    Path lambda;
    Path mu;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.lambda == b.lambda && a.mu == b.mu;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.mu < b.mu;
    }
};

Monomial make_monomial(const KGraph& g, const Path& lambda, const Path& mu);

// finite rational combination of monomials; zero coefficients are never stored
struct AlgebraElement {
    std::uint64_t graph_uid = 0;
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.graph_uid == b.graph_uid && a.terms == b.terms;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
};

AlgebraElement zero_element(const KGraph& g);
AlgebraElement monomial_element(const KGraph& g, const Path& lambda, const Path& mu,
                                const Rational& coeff = 1);
AlgebraElement vertex_element(const KGraph& g, int v);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const Rational& c, const AlgebraElement& a);

// bilinear extension of (lambda,mu)(nu,eta) = sum over Lambda^min(mu,nu) of
// (lambda.alpha, eta.beta); the empty sum is zero
AlgebraElement mul(const KGraph& g, const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement adjoint(const AlgebraElement& a);

// Delta(q)^E = prod over lambda in E of (q_v - q_lambda q_lambda*), computed
// both as a repeated product and by the sum over subsets G of E with
// mce_of_set(G) terms; the two must agree
AlgebraElement delta(const KGraph& g, int v, const std::vector<Path>& e);

// partition of terms by the grade d(lambda) - d(mu)
std::map<Degree, AlgebraElement> spectral_decompose(const AlgebraElement& a);

// every monomial with both paths of degree <= cap
std::vector<Monomial> all_monomials(const KGraph& g, const Degree& cap);

std::string element_to_string(const KGraph& g, const AlgebraElement& a);

// list of {lambda, mu, coeff} objects
std::string element_to_json(const KGraph& g, const AlgebraElement& a);

}  // namespace kgraph
