#pragma once

#include <set>
#include <string>
#include <vector>

#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/path.hpp"

namespace kgraph {

// L(F) = sum over colors of the largest degree coordinate appearing in F
int l_value(const KGraph& g, const std::vector<Path>& f);

// I(F) = union over colors j and members lambda with d(lambda)_j >= 1 of the
// initial segments lambda(0, e_j), deduplicated and sorted
std::vector<Path> initial_segments(const KGraph& g, const std::vector<Path>& f);

struct ReductionBranch {
    Path mu;                // member of I(F)
    std::vector<Path> ext;  // Ext(mu; F) in the restricted graph
    bool degenerate = false;  // s(mu) lies in the Ext set, so its gap projection is 0
    int child = -1;           // index of the child node, -1 when degenerate
};

struct ReductionNode {
    int vertex = -1;  // restricted-graph vertex index, the common range of f
    std::vector<Path> f;
    int l = 0;
    std::vector<Path> initial;               // I(F); empty on leaves
    std::vector<ReductionBranch> branches;   // empty iff l == 1
};

// A reduction of Delta(s)^F to edge-level gap projections over the graph
// restricted away from h.  Node 0 is the root; children always carry larger
// indices than their parents.  All paths are relative to
// restrict_to_complement(g, h), which both ends rebuild deterministically.
struct ReductionCertificate {
    std::set<std::string> h;
    std::vector<ReductionNode> nodes;
};

// Builds the certificate for f, an exhaustive set of the restricted graph.
// h must be hereditary so the restriction is itself a graph of rank k.
ReductionCertificate reduce(const KGraph& g, const std::set<std::string>& h, const FESet& f,
                            int l_budget = 6);

// Replays the certificate by exact linear algebra: the per-node product
// identities, the degenerate shortcuts, the strict L descent, and membership
// of every node's Delta(s)^F in the ideal generated by the recorded
// edge-level sets.  Throws IdentityFailure naming the offending node.
bool verify_certificate(const KGraph& g, const ReductionCertificate& cert);

std::string serialize_certificate(const KGraph& g, const ReductionCertificate& cert);

}  // namespace kgraph
