#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kgraph/check.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

struct SuiteOptions {
    std::uint64_t seed = 20240817;
    std::uint64_t budget = std::uint64_t{1} << 20;
    int random_triples = 10000;
};

// combinatorics, toeplitz, bimodule, katsura, appendix
const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") against the graph.  Checks that don't
// apply to the graph at hand are reported as skipped with the reason;
// operations that must refuse (wrong-level quotients on bad graphs) are
// asserted to actually refuse.  Unknown suite names are UnknownId.
std::vector<CheckReport> run_suite(const KGraph& g, const std::string& name,
                                   const SuiteOptions& opt = {});

}  // namespace kgraph
