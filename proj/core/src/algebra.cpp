#include "kgraph/algebra.hpp"

#include <algorithm>

#include "json.hpp"

namespace kgraph {

namespace {

void add_term(AlgebraElement& a, const Monomial& m, const Rational& c) {
    auto it = a.terms.find(m);
    if (it == a.terms.end()) {
        if (c != 0) a.terms.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) a.terms.erase(it);
}

void check_same_graph(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.graph_uid != b.graph_uid)
        throw Error(errc::graph_mismatch, "elements belong to different graphs");
}

}  // namespace

Monomial make_monomial(const KGraph& g, const Path& lambda, const Path& mu) {
    if (source(g, lambda) != source(g, mu))
        throw Error(errc::not_composable, "monomial paths '" + path_to_string(g, lambda) +
                                              "' and '" + path_to_string(g, mu) +
                                              "' have different sources");
    return Monomial{lambda, mu};
}

AlgebraElement zero_element(const KGraph& g) { return AlgebraElement{g.uid, {}}; }

AlgebraElement monomial_element(const KGraph& g, const Path& lambda, const Path& mu,
                                const Rational& coeff) {
    AlgebraElement a = zero_element(g);
    add_term(a, make_monomial(g, lambda, mu), coeff);
    return a;
}

AlgebraElement vertex_element(const KGraph& g, int v) {
    Path p = vertex_path(g, v);
    return monomial_element(g, p, p);
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_graph(a, b);
    AlgebraElement out = a;
    for (const auto& [m, c] : b.terms) add_term(out, m, c);
    return out;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_graph(a, b);
    AlgebraElement out = a;
    for (const auto& [m, c] : b.terms) add_term(out, m, -c);
    return out;
}

AlgebraElement scale(const Rational& c, const AlgebraElement& a) {
    AlgebraElement out;
    out.graph_uid = a.graph_uid;
    if (c == 0) return out;
    for (const auto& [m, x] : a.terms) out.terms.emplace(m, c * x);
    return out;
}

AlgebraElement mul(const KGraph& g, const AlgebraElement& a, const AlgebraElement& b) {
    check_same_graph(a, b);
    if (a.graph_uid != g.uid)
        throw Error(errc::graph_mismatch, "elements do not belong to the given graph");
    AlgebraElement out = zero_element(g);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            Rational c = ca * cb;
            for (const auto& [alpha, beta] : lambda_min(g, ma.mu, mb.lambda)) {
                add_term(out, Monomial{compose(g, ma.lambda, alpha), compose(g, mb.mu, beta)},
                         c);
            }
        }
    }
    return out;
}

AlgebraElement adjoint(const AlgebraElement& a) {
    AlgebraElement out;
    out.graph_uid = a.graph_uid;
    for (const auto& [m, c] : a.terms) out.terms.emplace(Monomial{m.mu, m.lambda}, c);
    return out;
}

AlgebraElement delta(const KGraph& g, int v, const std::vector<Path>& e) {
    for (const Path& p : e)
        if (p.v != v)
            throw Error(errc::range_mismatch, "path '" + path_to_string(g, p) +
                                                  "' does not have range '" +
                                                  g.vertex_names[static_cast<size_t>(v)] + "'");
    if (e.size() >= 63)
        throw Error(errc::budget_exceeded, "set too large for subset expansion");

    AlgebraElement product = vertex_element(g, v);
    for (const Path& p : e)
        product = mul(g, product, sub(vertex_element(g, v), monomial_element(g, p, p)));

    AlgebraElement closed = vertex_element(g, v);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e.size()); ++mask) {
        std::vector<Path> sel;
        for (size_t i = 0; i < e.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sel.push_back(e[i]);
        Rational sign = (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
        for (const Path& m : mce_of_set(g, sel))
            closed = add(closed, monomial_element(g, m, m, sign));
    }

    if (product != closed)
        throw Error(errc::closed_form_disagreement,
                    "product expansion and subset sum disagree at vertex '" +
                        g.vertex_names[static_cast<size_t>(v)] + "'");
    return product;
}

std::map<Degree, AlgebraElement> spectral_decompose(const AlgebraElement& a) {
    std::map<Degree, AlgebraElement> out;
    for (const auto& [m, c] : a.terms) {
        Degree grade(m.lambda.deg.size());
        for (size_t i = 0; i < grade.size(); ++i) grade[i] = m.lambda.deg[i] - m.mu.deg[i];
        auto [it, fresh] = out.try_emplace(grade);
        if (fresh) it->second.graph_uid = a.graph_uid;
        it->second.terms.emplace(m, c);
    }
    return out;
}

std::vector<Monomial> all_monomials(const KGraph& g, const Degree& cap) {
    std::vector<Path> paths = all_paths(g, cap);
    // group by source so only composable pairs are formed
    std::map<int, std::vector<const Path*>> by_source;
    for (const Path& p : paths) by_source[source(g, p)].push_back(&p);
    std::vector<Monomial> out;
    for (const auto& [s, group] : by_source) {
        (void)s;
        for (const Path* l : group)
            for (const Path* m : group) out.push_back(Monomial{*l, *m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string element_to_string(const KGraph& g, const AlgebraElement& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : a.terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag != 1) s += mag.str() + " ";
        s += "(" + path_to_string(g, m.lambda) + ", " + path_to_string(g, m.mu) + ")";
    }
    return s;
}

std::string element_to_json(const KGraph& g, const AlgebraElement& a) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : a.terms)
        arr.push_back(nlohmann::ordered_json{{"lambda", path_to_string(g, m.lambda)},
                                             {"mu", path_to_string(g, m.mu)},
                                             {"coeff", c.str()}});
    return arr.dump();
}

}  // namespace kgraph
