#pragma once

#include <map>
#include <memory>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

// coordinates of the formal algebra: one slot per monomial.  Only defined
// for acyclic graphs, where the monomial count is finite.
struct MonomialIndex {
    std::uint64_t graph_uid = 0;
    std::vector<Monomial> monomials;
    std::map<Monomial, int> pos;

    int index_of(const Monomial& m) const;
    size_t size() const { return monomials.size(); }
};

std::shared_ptr<const MonomialIndex> make_monomial_index(const KGraph& g);

using SparseVec = std::map<int, Rational>;

SparseVec to_vec(const MonomialIndex& index, const AlgebraElement& a);
AlgebraElement from_vec(const KGraph& g, const MonomialIndex& index, const SparseVec& v);

// row-reduced basis of a two-sided *-ideal; rows are keyed by pivot column
struct IdealBasis {
    std::shared_ptr<const MonomialIndex> index;
    std::map<int, SparseVec> rows;

    size_t dimension() const { return rows.size(); }
};

// residual of v after elimination against the basis rows
SparseVec reduce(const IdealBasis& basis, SparseVec v);

// inserts v if independent, keeping the basis row-reduced; true if rank grew
bool basis_insert(IdealBasis& basis, SparseVec v);

// closure of the generators under adjoint and one-sided multiplication by
// vertex and edge monomials, which reaches every monomial multiple
IdealBasis ideal_from_generators(const KGraph& g, const std::vector<AlgebraElement>& gens);

// ideal generated by Delta(q)^E over edge-level exhaustive sets at every
// vertex; full_fe additionally feeds in every path-level exhaustive set
IdealBasis ck_ideal(const KGraph& g, bool full_fe = false);

bool ideal_contains(const IdealBasis& basis, const AlgebraElement& a);

// equality modulo the ideal
bool ck_equal(const IdealBasis& basis, const AlgebraElement& a, const AlgebraElement& b);

}  // namespace kgraph
