#include "kgraph/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "kgraph/algebra.hpp"
#include "kgraph/errors.hpp"
#include "kgraph/ideal.hpp"

namespace kgraph {

int l_value(const KGraph& g, const std::vector<Path>& f) {
    (void)g;
    if (f.empty()) throw Error(errc::empty_set, "L is undefined for the empty set");
    Degree mx = zero_degree(static_cast<int>(f.front().deg.size()));
    for (const Path& p : f) mx = degree_join(mx, p.deg);
    return degree_total(mx);
}

std::vector<Path> initial_segments(const KGraph& g, const std::vector<Path>& f) {
    if (f.empty()) throw Error(errc::mixed_ranges, "no common range in an empty set");
    int v = f.front().v;
    for (const Path& p : f)
        if (p.v != v)
            throw Error(errc::mixed_ranges, "members range over distinct vertices");
    std::set<Path> seen;
    for (const Path& p : f)
        for (int j = 1; j <= g.k; ++j)
            if (p.deg[j - 1] >= 1)
                seen.insert(factor(g, p, unit_degree(g.k, j)).first);
    return std::vector<Path>(seen.begin(), seen.end());
}

namespace {

void check_h_names(const KGraph& g, const std::set<std::string>& h) {
    for (const std::string& name : h)
        if (g.vertex_index(name) < 0)
            throw Error(errc::unknown_id, "unknown vertex '" + name + "' in H");
}

int build_node(const KGraph& res, std::vector<ReductionNode>& nodes, const FESet& f,
               int l_budget) {
    int l = l_value(res, f.members);
    if (l > l_budget)
        throw Error(errc::l_budget_exceeded,
                    "L=" + std::to_string(l) + " exceeds the budget of " + std::to_string(l_budget));
    ExhaustiveCheck chk = is_exhaustive(res, f.v, f.members);
    if (!chk.exhaustive)
        throw Error(errc::not_exhaustive,
                    "set at " + res.vertex_names[f.v] + " misses " +
                        path_to_string(res, *chk.witness));

    int idx = static_cast<int>(nodes.size());
    nodes.emplace_back();
    ReductionNode node;
    node.vertex = f.v;
    node.f = f.members;
    node.l = l;
    if (l > 1) {
        node.initial = initial_segments(res, f.members);
        for (const Path& mu : node.initial) {
            ReductionBranch branch;
            branch.mu = mu;
            branch.ext = ext(res, mu, f.members);
            int smu = source(res, mu);
            Path sp = vertex_path(res, smu);
            branch.degenerate =
                std::find(branch.ext.begin(), branch.ext.end(), sp) != branch.ext.end();
            if (!branch.degenerate) {
                FESet childf;
                childf.v = smu;
                childf.members = branch.ext;
                branch.child = build_node(res, nodes, childf, l_budget);
            }
            node.branches.push_back(std::move(branch));
        }
    }
    nodes[idx] = std::move(node);
    return idx;
}

// s_v - s_mu s_mu^*
AlgebraElement gap(const KGraph& g, int v, const Path& mu) {
    return sub(vertex_element(g, v), monomial_element(g, mu, mu));
}

void fail(int node, const std::string& what) {
    throw Error(errc::identity_failure, "node " + std::to_string(node) + ": " + what);
}

}  // namespace

ReductionCertificate reduce(const KGraph& g, const std::set<std::string>& h, const FESet& f,
                            int l_budget) {
    check_h_names(g, h);
    if (!hereditary_in(g, h))
        throw Error(errc::precondition_violated,
                    "H must be hereditary so the restriction keeps unique factorisation");
    KGraph res = restrict_to_complement(g, h);
    ReductionCertificate cert;
    cert.h = h;
    build_node(res, cert.nodes, f, l_budget);
    return cert;
}

bool verify_certificate(const KGraph& g, const ReductionCertificate& cert) {
    if (!predicates(g).acyclic)
        throw Error(errc::not_acyclic, "certificate verification runs in the formal algebra");
    check_h_names(g, cert.h);
    if (!hereditary_in(g, cert.h))
        throw Error(errc::precondition_violated, "H recorded in the certificate is not hereditary");
    KGraph res = restrict_to_complement(g, cert.h);
    if (cert.nodes.empty())
        throw Error(errc::identity_failure, "node 0: certificate has no nodes");

    int n = static_cast<int>(cert.nodes.size());
    for (int idx = 0; idx < n; ++idx) {
        const ReductionNode& node = cert.nodes[idx];
        if (node.vertex < 0 || node.vertex >= res.vertex_count()) fail(idx, "vertex out of range");

        // recorded paths must replay through the path constructor
        auto well_formed = [&](const Path& p) {
            if (p.v < 0 || p.v >= res.vertex_count()) return false;
            for (int e : p.word)
                if (e < 0 || e >= res.edge_count()) return false;
            try {
                return make_path(res, p.v, p.word) == p;
            } catch (const Error&) {
                return false;
            }
        };
        for (const Path& p : node.f)
            if (!well_formed(p) || p.v != node.vertex) fail(idx, "malformed member of F");
        if (node.f.empty()) fail(idx, "empty F");
        if (node.l != l_value(res, node.f)) fail(idx, "recorded L disagrees with F");
        if (!is_exhaustive(res, node.vertex, node.f).exhaustive)
            fail(idx, "F is not exhaustive at its vertex");

        if (node.l == 1) {
            if (!node.branches.empty() || !node.initial.empty())
                fail(idx, "leaves must not branch");
            continue;
        }

        if (node.initial != initial_segments(res, node.f))
            fail(idx, "recorded I(F) disagrees with the initial segments of F");
        if (node.branches.size() != node.initial.size())
            fail(idx, "one branch per member of I(F) expected");

        Degree bound = zero_degree(res.k);
        for (const Path& p : node.f) bound = degree_join(bound, p.deg);

        AlgebraElement total = delta(res, node.vertex, node.f);
        for (size_t bi = 0; bi < node.branches.size(); ++bi) {
            const ReductionBranch& branch = node.branches[bi];
            if (branch.mu != node.initial[bi]) fail(idx, "branches out of step with I(F)");
            int smu = source(res, branch.mu);
            for (const Path& p : branch.ext) {
                if (!well_formed(p) || p.v != smu) fail(idx, "malformed Ext member");
                if (!degree_leq(p.deg, bound)) fail(idx, "Ext member exceeds the degree bound");
            }

            // product identity: prod over lambda in Ext of (s_v - s_{mu lambda} s_{mu lambda}^*)
            // equals (s_v - s_mu s_mu^*) + s_mu Delta(s)^{Ext} s_mu^*
            AlgebraElement lhs = vertex_element(res, node.vertex);
            for (const Path& lam : branch.ext)
                lhs = mul(res, lhs, gap(res, node.vertex, compose(res, branch.mu, lam)));
            AlgebraElement smu_elem =
                monomial_element(res, branch.mu, vertex_path(res, smu));
            AlgebraElement rhs =
                add(gap(res, node.vertex, branch.mu),
                    mul(res, mul(res, smu_elem, delta(res, smu, branch.ext)), adjoint(smu_elem)));
            if (lhs != rhs) fail(idx, "product identity fails for mu=" + path_to_string(res, branch.mu));

            total = mul(res, total, lhs);

            bool has_vertex =
                std::find(branch.ext.begin(), branch.ext.end(), vertex_path(res, smu)) !=
                branch.ext.end();
            if (branch.degenerate != has_vertex) fail(idx, "degenerate flag disagrees with Ext");
            if (branch.degenerate) {
                if (branch.child != -1) fail(idx, "degenerate branches take no child");
                if (!delta(res, smu, branch.ext).is_zero())
                    fail(idx, "degenerate branch with a nonzero gap product");
            } else {
                if (branch.child <= idx || branch.child >= n)
                    fail(idx, "child index must point forward in the node list");
                const ReductionNode& child = cert.nodes[branch.child];
                if (child.vertex != smu || child.f != branch.ext)
                    fail(idx, "child node does not continue this branch");
                if (child.l >= node.l) fail(idx, "L must strictly decrease into children");
            }
        }

        // absorbing the branch products must leave Delta(s)^F unchanged
        if (total != delta(res, node.vertex, node.f))
            fail(idx, "absorption identity fails");
    }

    // every node's gap product lies in the ideal of the recorded edge-level sets
    std::vector<AlgebraElement> gens;
    for (const ReductionNode& node : cert.nodes) {
        const std::vector<Path>& edge_set = node.l == 1 ? node.f : node.initial;
        gens.push_back(delta(res, node.vertex, edge_set));
    }
    IdealBasis basis = ideal_from_generators(res, gens);
    for (int idx = 0; idx < n; ++idx)
        if (!ideal_contains(basis, delta(res, cert.nodes[idx].vertex, cert.nodes[idx].f)))
            fail(idx, "Delta(s)^F escapes the edge-level ideal");
    return true;
}

std::string serialize_certificate(const KGraph& g, const ReductionCertificate& cert) {
    KGraph res = restrict_to_complement(g, cert.h);
    std::ostringstream out;
    out << "reduction certificate\n";
    out << "h:";
    if (cert.h.empty()) out << " (none)";
    for (const std::string& name : cert.h) out << " " << name;
    out << "\nnodes: " << cert.nodes.size() << "\n";
    auto path_list = [&](const std::vector<Path>& ps) {
        std::string s = "{";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ", ";
            s += path_to_string(res, ps[i]);
        }
        return s + "}";
    };
    for (size_t idx = 0; idx < cert.nodes.size(); ++idx) {
        const ReductionNode& node = cert.nodes[idx];
        out << "node " << idx << ": vertex " << res.vertex_names[node.vertex] << ", L="
            << node.l << ", F=" << path_list(node.f);
        if (node.l == 1) {
            out << " (leaf)\n";
            continue;
        }
        out << "\n  I(F) = " << path_list(node.initial) << "\n";
        for (const ReductionBranch& branch : node.branches) {
            out << "  mu=" << path_to_string(res, branch.mu) << ": ext=" << path_list(branch.ext);
            if (branch.degenerate)
                out << ", degenerate\n";
            else
                out << ", child=" << branch.child << "\n";
        }
    }
    return out.str();
}

}  // namespace kgraph
