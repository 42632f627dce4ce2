#include "kgraph/pathspace.hpp"

#include <sstream>

namespace kgraph {

int TruncatedRep::index_of(const Path& p) const {
    auto it = pos.find(p);
    return it == pos.end() ? -1 : it->second;
}

bool TruncatedRep::in_safe_zone(const Path& p) const {
    return degree_leq(p.deg, degree_sub(cap, headroom));
}

TruncatedRep make_rep(const KGraph& g, const Degree& cap, const Degree& headroom) {
    if (static_cast<int>(cap.size()) != g.k || static_cast<int>(headroom.size()) != g.k)
        throw Error(errc::degree_out_of_range, "degree has wrong rank");
    if (!degree_leq(headroom, cap))
        throw Error(errc::degree_out_of_range, "headroom exceeds the cap");
    TruncatedRep rep;
    rep.graph_uid = g.uid;
    rep.cap = cap;
    rep.headroom = headroom;
    rep.basis = all_paths(g, cap);
    for (size_t i = 0; i < rep.basis.size(); ++i)
        rep.pos.emplace(rep.basis[i], static_cast<int>(i));
    return rep;
}

TruncatedRep make_rep(const KGraph& g) {
    return make_rep(g, Degree(static_cast<size_t>(g.k), 3), Degree(static_cast<size_t>(g.k), 1));
}

RepMatrix rep_w(const KGraph& g, const TruncatedRep& rep, const Path& lambda) {
    RepMatrix m;
    int sl = source(g, lambda);
    for (size_t col = 0; col < rep.basis.size(); ++col) {
        const Path& mu = rep.basis[col];
        if (mu.v != sl) continue;
        if (!degree_leq(degree_add(lambda.deg, mu.deg), rep.cap)) continue;
        int row = rep.index_of(compose(g, lambda, mu));
        m[{row, static_cast<int>(col)}] += 1;
    }
    return m;
}

RepMatrix rep_element(const KGraph& g, const TruncatedRep& rep, const AlgebraElement& a) {
    if (a.graph_uid != rep.graph_uid)
        throw Error(errc::graph_mismatch, "element does not belong to the represented graph");
    RepMatrix m;
    for (const auto& [mono, c] : a.terms) {
        // w_mu* xi_nu = xi_eta when nu = mu.eta, else 0
        for (size_t col = 0; col < rep.basis.size(); ++col) {
            const Path& nu = rep.basis[col];
            if (!degree_leq(mono.mu.deg, nu.deg) || nu.v != mono.mu.v) continue;
            auto [head, eta] = factor(g, nu, mono.mu.deg);
            if (head != mono.mu) continue;
            if (!degree_leq(degree_add(mono.lambda.deg, eta.deg), rep.cap)) continue;
            int row = rep.index_of(compose(g, mono.lambda, eta));
            auto key = std::make_pair(row, static_cast<int>(col));
            auto it = m.find(key);
            if (it == m.end()) {
                m.emplace(key, c);
            } else {
                it->second += c;
                if (it->second == 0) m.erase(it);
            }
        }
    }
    return m;
}

RepVec apply_matrix(const RepMatrix& m, const RepVec& v) {
    RepVec out;
    for (const auto& [rc, x] : m) {
        auto it = v.find(rc.second);
        if (it == v.end()) continue;
        Rational add = x * it->second;
        auto slot = out.find(rc.first);
        if (slot == out.end()) {
            if (add != 0) out.emplace(rc.first, add);
        } else {
            slot->second += add;
            if (slot->second == 0) out.erase(slot);
        }
    }
    return out;
}

DeltaWitness delta_witness(const KGraph& g, const TruncatedRep& rep, int v,
                           const std::vector<Path>& e) {
    for (const Path& p : e) {
        if (p.v != v)
            throw Error(errc::range_mismatch, "path '" + path_to_string(g, p) +
                                                  "' does not have range '" +
                                                  g.vertex_names[static_cast<size_t>(v)] + "'");
        if (p.word.empty())
            throw Error(errc::precondition_violated,
                        "the range vertex itself may not be a member");
    }
    RepVec vec;
    vec.emplace(rep.index_of(vertex_path(g, v)), 1);
    RepMatrix qv = rep_element(g, rep, vertex_element(g, v));
    for (const Path& l : e) {
        RepVec kept = apply_matrix(qv, vec);
        RepVec cut = apply_matrix(rep_element(g, rep, monomial_element(g, l, l)), vec);
        for (const auto& [i, c] : cut) {
            auto it = kept.find(i);
            if (it == kept.end()) {
                if (c != 0) kept.emplace(i, -c);
            } else {
                it->second -= c;
                if (it->second == 0) kept.erase(it);
            }
        }
        vec = std::move(kept);
    }
    RepVec expect;
    expect.emplace(rep.index_of(vertex_path(g, v)), 1);
    if (vec != expect)
        throw Error(errc::closed_form_disagreement,
                    "delta witness is not the vertex basis vector at '" +
                        g.vertex_names[static_cast<size_t>(v)] + "'");
    return DeltaWitness{true, std::move(vec)};
}

std::string matrix_to_triplets(const RepMatrix& m) {
    std::ostringstream out;
    for (const auto& [rc, x] : m) out << rc.first << ' ' << rc.second << ' ' << x << '\n';
    return out.str();
}

}  // namespace kgraph
