#pragma once

#include <stdexcept>
#include <string>

namespace kgraph {

enum class errc {
    parse_error,
    unknown_id,
    dangling_edge_endpoint,
    non_bijective_squares,
    inconsistent_triple,
    not_composable,
    degree_out_of_range,
    mixed_ranges,
    range_mismatch,
    graph_mismatch,
    budget_exceeded,
    closed_form_disagreement,
    not_acyclic,
    not_locally_convex,
    not_in_phi_image,
    mixed_degrees,
    degree_mismatch,
    length_mismatch,
    precondition_violated,
    empty_set,
    not_exhaustive,
    l_budget_exceeded,
    identity_failure,
};

const char* errc_name(errc c);

// Single exception type for the whole library; `code` is what tests and the
// CLI dispatch on, `what()` carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}

    errc code;
};

}  // namespace kgraph
