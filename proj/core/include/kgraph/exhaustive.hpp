#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

struct ExhaustiveCheck {
    bool exhaustive = false;
    // a path with range v that no member of E extends into, present iff
    // the check failed
    std::optional<Path> witness;
};

// decides whether E subset of vLambda is exhaustive: every path with range v
// must admit a common extension with some member.  Works on cyclic graphs;
// the search state is Ext(mu; E), whose members have bounded degree, so only
// finitely many states exist.
ExhaustiveCheck is_exhaustive(const KGraph& g, int v, const std::vector<Path>& e);

struct FESet {
    int v = -1;
    std::vector<Path> members;
};

// all exhaustive subsets of the edges received by v, smallest first; with
// minimal_only only the inclusion-minimal ones are kept
std::vector<FESet> enumerate_edge_fe_sets(const KGraph& g, int v,
                                          std::uint64_t budget = std::uint64_t{1} << 20,
                                          bool minimal_only = false);

// all exhaustive subsets of { mu in vLambda : 0 < d(mu) <= cap }
std::vector<FESet> enumerate_fe_sets(const KGraph& g, int v, const Degree& cap,
                                     std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace kgraph
