#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/katsura.hpp"

namespace kgraph {

struct AnalysisReport {
    int k = 0;
    size_t vertices = 0;
    size_t edges = 0;
    std::vector<int> edges_per_color;
    GraphPredicates preds;

    // finite graphs are always finitely aligned; the statistics make the
    // claim concrete
    size_t lambda_min_pairs = 0;
    size_t lambda_min_largest = 0;

    std::vector<FESet> edge_fe;  // edge-level exhaustive sets, all vertices

    bool ck_ideal_available = false;  // acyclic graphs only
    size_t ck_ideal_dimension = 0;

    std::vector<KatsuraReport> katsura;  // one per color when locally convex
    std::vector<std::string> notes;

    // always (free abelian on the vertices, 0)
    std::string k_theory;
};

AnalysisReport analyze(const KGraph& g, std::uint64_t budget = std::uint64_t{1} << 20);

std::string report_to_text(const KGraph& g, const AnalysisReport& r);

// the one-color block on its own, with the generators written out
std::string katsura_to_text(const ColorContext& ctx, const KatsuraReport& kr);

}  // namespace kgraph
