#include "kgraph/ideal.hpp"

#include <deque>

#include "kgraph/exhaustive.hpp"

namespace kgraph {

int MonomialIndex::index_of(const Monomial& m) const {
    auto it = pos.find(m);
    if (it == pos.end())
        throw Error(errc::unknown_id, "monomial outside the ambient index");
    return it->second;
}

std::shared_ptr<const MonomialIndex> make_monomial_index(const KGraph& g) {
    if (!predicates(g).acyclic)
        throw Error(errc::not_acyclic, "the formal algebra is infinite-dimensional on cycles");
    auto index = std::make_shared<MonomialIndex>();
    index->graph_uid = g.uid;
    index->monomials = all_monomials(g, natural_cap(g));
    for (size_t i = 0; i < index->monomials.size(); ++i)
        index->pos.emplace(index->monomials[i], static_cast<int>(i));
    return index;
}

SparseVec to_vec(const MonomialIndex& index, const AlgebraElement& a) {
    if (a.graph_uid != index.graph_uid)
        throw Error(errc::graph_mismatch, "element does not belong to the indexed graph");
    SparseVec v;
    for (const auto& [m, c] : a.terms) v.emplace(index.index_of(m), c);
    return v;
}

AlgebraElement from_vec(const KGraph& g, const MonomialIndex& index, const SparseVec& v) {
    AlgebraElement a;
    a.graph_uid = index.graph_uid;
    for (const auto& [i, c] : v)
        if (c != 0) a.terms.emplace(index.monomials[static_cast<size_t>(i)], c);
    return a;
}

namespace {

void axpy(SparseVec& v, const Rational& c, const SparseVec& row) {
    for (const auto& [i, x] : row) {
        auto it = v.find(i);
        if (it == v.end()) {
            v.emplace(i, c * x);
        } else {
            it->second += c * x;
            if (it->second == 0) v.erase(it);
        }
    }
}

}  // namespace

SparseVec reduce(const IdealBasis& basis, SparseVec v) {
    // every row's smallest coordinate is its pivot, so elimination never
    // touches columns left of the current one
    for (auto it = v.begin(); it != v.end();) {
        auto row = basis.rows.find(it->first);
        if (row == basis.rows.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        Rational c = -it->second;
        axpy(v, c, row->second);
        it = v.upper_bound(col);
    }
    return v;
}

bool basis_insert(IdealBasis& basis, SparseVec v) {
    v = reduce(basis, v);
    if (v.empty()) return false;
    Rational inv = Rational(1) / v.begin()->second;
    for (auto& [i, c] : v) c *= inv;
    int pivot = v.begin()->first;
    // clear the new pivot column from existing rows
    for (auto& [p, row] : basis.rows) {
        (void)p;
        auto hit = row.find(pivot);
        if (hit == row.end()) continue;
        Rational c = -hit->second;
        axpy(row, c, v);
    }
    basis.rows.emplace(pivot, std::move(v));
    return true;
}

IdealBasis ideal_from_generators(const KGraph& g, const std::vector<AlgebraElement>& gens) {
    IdealBasis basis;
    basis.index = make_monomial_index(g);

    // one-sided multiplications by these reach every monomial multiple:
    // (lambda,mu) = (e1,s(e1))···(em,s(em)) · adjoint of the same for mu
    std::vector<AlgebraElement> side;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        side.push_back(vertex_element(g, static_cast<int>(v)));
    for (size_t e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].dst < 0) continue;
        Path ep = edge_path(g, static_cast<int>(e));
        Path sp = vertex_path(g, g.edges[e].src);
        side.push_back(monomial_element(g, ep, sp));
        side.push_back(monomial_element(g, sp, ep));
    }

    std::deque<AlgebraElement> work(gens.begin(), gens.end());
    while (!work.empty()) {
        AlgebraElement a = std::move(work.front());
        work.pop_front();
        if (a.is_zero()) continue;
        if (!basis_insert(basis, to_vec(*basis.index, a))) continue;
        work.push_back(adjoint(a));
        for (const AlgebraElement& m : side) {
            work.push_back(mul(g, m, a));
            work.push_back(mul(g, a, m));
        }
    }
    return basis;
}

IdealBasis ck_ideal(const KGraph& g, bool full_fe) {
    std::vector<AlgebraElement> gens;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        for (const FESet& fe : enumerate_edge_fe_sets(g, static_cast<int>(v)))
            gens.push_back(delta(g, fe.v, fe.members));
        if (full_fe)
            for (const FESet& fe : enumerate_fe_sets(g, static_cast<int>(v), natural_cap(g)))
                gens.push_back(delta(g, fe.v, fe.members));
    }
    return ideal_from_generators(g, gens);
}

bool ideal_contains(const IdealBasis& basis, const AlgebraElement& a) {
    return reduce(basis, to_vec(*basis.index, a)).empty();
}

bool ck_equal(const IdealBasis& basis, const AlgebraElement& a, const AlgebraElement& b) {
    if (a.graph_uid != b.graph_uid)
        throw Error(errc::graph_mismatch, "elements belong to different graphs");
    return ideal_contains(basis, sub(a, b));
}

}  // namespace kgraph
