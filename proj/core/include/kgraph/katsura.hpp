#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/bimodule.hpp"
#include "kgraph/exhaustive.hpp"

namespace kgraph {

// c . Theta_{x,y}, the rank-one operator z |-> c . x <y, z>
struct ThetaTerm {
    BimoduleElement x;
    BimoduleElement y;
    Rational c = 1;
};

struct CompactOperatorSum {
    std::vector<ThetaTerm> terms;
};

BimoduleElement apply_compact(const ColorContext& ctx, const CompactOperatorSum& sum,
                              const BimoduleElement& z);

// vertices with no incoming colour-i edge; their projections span ker psi
std::vector<int> ker_psi_vertices(const ColorContext& ctx);

// the complement: vertices receiving at least one colour-i edge
std::vector<int> h_jx(const ColorContext& ctx);

// One exhaustive set of the colour-deleted graph restricted away from h_jx,
// together with the smallest patch F of colour-i edges making E u F
// exhaustive in the full graph.
struct BTildeEntry {
    int vertex = -1;             // full-graph index
    std::vector<Path> e;         // full-graph edge paths, colours != i
    std::vector<Path> f;         // full-graph colour-i edge paths
    bool in_generator_list = false;
};

std::vector<BTildeEntry> b_tilde(const ColorContext& ctx,
                                 std::uint64_t budget = std::uint64_t{1} << 20);

// psi(s_v) = sum over lambda in v Lambda^{e_i} of Theta_{s_lambda, s_lambda}
CompactOperatorSum vertex_compact_expansion(const ColorContext& ctx, int v);

// psi of the gap projection of E u F, expanded over subsets G meeting F:
// sum of (-1)^{|G|+1} Theta_{s_mu, s_mu} with mu running over MCE(G)
CompactOperatorSum fe_compact_expansion(const ColorContext& ctx, const std::vector<Path>& e,
                                        const std::vector<Path>& f);

struct KatsuraReport {
    int color = 0;
    std::vector<int> ker;             // ker psi vertex indices
    std::vector<int> hjx;             // H_{J_X} vertex indices
    std::vector<BTildeEntry> entries;
    // J_X generators over the colour-deleted algebra, aligned with expansions
    std::vector<AlgebraElement> generators;
    std::vector<CompactOperatorSum> expansions;
    std::vector<std::string> notes;
};

KatsuraReport katsura_report(const ColorContext& ctx,
                             std::uint64_t budget = std::uint64_t{1} << 20);

}  // namespace kgraph
