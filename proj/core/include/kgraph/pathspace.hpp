#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

// the finite window {xi_mu : d(mu) <= cap} of the path-space representation;
// products of total degree <= headroom are exact on the safe zone
// {xi_mu : d(mu) <= cap - headroom}
struct TruncatedRep {
    std::uint64_t graph_uid = 0;
    Degree cap;
    Degree headroom;
    std::vector<Path> basis;
    std::map<Path, int> pos;

    int index_of(const Path& p) const;
    bool in_safe_zone(const Path& p) const;
};

TruncatedRep make_rep(const KGraph& g, const Degree& cap, const Degree& headroom);
TruncatedRep make_rep(const KGraph& g);  // cap (3,...,3), headroom (1,...,1)

using RepVec = std::map<int, Rational>;
using RepMatrix = std::map<std::pair<int, int>, Rational>;

// w_lambda: xi_mu -> xi_{lambda.mu} when composable, truncated to the cap
RepMatrix rep_w(const KGraph& g, const TruncatedRep& rep, const Path& lambda);

// linear extension of (lambda,mu) -> w_lambda w_mu*
RepMatrix rep_element(const KGraph& g, const TruncatedRep& rep, const AlgebraElement& a);

RepVec apply_matrix(const RepMatrix& m, const RepVec& v);

struct DeltaWitness {
    bool nonzero = false;
    RepVec vec;
};

// Delta(w)^E applied to xi_v; requires v itself not to be a member, and then
// the result must be xi_v, witnessing that the delta projection is nonzero
DeltaWitness delta_witness(const KGraph& g, const TruncatedRep& rep, int v,
                           const std::vector<Path>& e);

// "row col value" lines, sorted
std::string matrix_to_triplets(const RepMatrix& m);

}  // namespace kgraph
