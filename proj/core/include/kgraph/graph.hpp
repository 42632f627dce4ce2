#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/errors.hpp"

namespace kgraph {

// Raw, unvalidated graph description as it appears in a .kg file.
struct EdgeSpec {
    std::string id;
    int color = 0;    // 1-based
    std::string src;  // source vertex s(e)
    std::string dst;  // range vertex r(e); an edge is an arrow src -> dst
};

struct SquareSpec {
    // asserts f.g = gp.fp with color(f) = color(fp) < color(g) = color(gp)
    std::string f, g, gp, fp;
};

struct KGraphSpec {
    int k = 0;
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    std::vector<SquareSpec> squares;
};

struct Edge {
    int color = 0;  // 1-based
    int src = -1;   // vertex index
    int dst = -1;   // vertex index, or -1 when the range vertex was cut away
                    // by restrict_to_complement (see cut_ranges)
};

struct Square {
    int f = -1, g = -1, gp = -1, fp = -1;  // edge indices
};

// Validated immutable graph.  All operations treat it as read-only; the uid
// identifies the graph so that elements built over one graph cannot be mixed
// with another (remove_color / restrict_to_complement yield fresh uids).
class KGraph {
public:
    int k = 0;
    std::uint64_t uid = 0;
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;
    std::vector<Edge> edges;
    std::vector<Square> squares;
    // dangling edge index -> original range vertex name (round-trip only)
    std::map<int, std::string> cut_ranges;

    // incoming[v][c-1]: edges e with dst == v and color == c, ascending.
    // vLambda^{e_c} in the usual notation: paths of degree e_c with range v.
    std::vector<std::vector<std::vector<int>>> incoming;

    // flip_fwd[(f,g)] = (gp,fp) rewrites an ascending composable pair
    // (color f < color g) into the descending pair with the same composite;
    // flip_bwd is the inverse map keyed on (gp,fp).
    std::map<std::pair<int, int>, std::pair<int, int>> flip_fwd;
    std::map<std::pair<int, int>, std::pair<int, int>> flip_bwd;

    int vertex_index(const std::string& name) const;  // -1 when absent
    int edge_index(const std::string& name) const;    // -1 when absent
    const std::vector<int>& edges_into(int v, int color) const;
    size_t vertex_count() const { return vertex_names.size(); }
    size_t edge_count() const { return edges.size(); }

private:
    std::map<std::string, int> vertex_pos_;
    std::map<std::string, int> edge_pos_;

    friend struct GraphBuilder;
};

struct GraphPredicates {
    bool locally_convex = false;
    bool no_sources = false;
    bool acyclic = false;
    std::vector<int> edge_counts;  // per color, index c-1
};

// Checks ids, endpoints, the per-color-pair square bijection, and (k >= 3)
// consistency of the two reorder routes for every composable 3-color word.
KGraph validate(const KGraphSpec& spec);

GraphPredicates predicates(const KGraph& g);

// The (k-1)-graph obtained by deleting all color-i edges; remaining colors
// are renumbered (c > i becomes c-1), vertices and edge ids are unchanged.
KGraph remove_color(const KGraph& g, int i);

// Full subcategory on paths with source outside H: vertices not in H, edges
// whose source survives.  An edge's range may dangle (dst == -1); dangling
// edges never occur in paths and are kept only so the graph serializes back.
KGraph restrict_to_complement(const KGraph& g, const std::set<std::string>& h);

// Recover a serializable description (dangling ranges restored by name).
KGraphSpec to_spec(const KGraph& g);

// True when every edge of the restriction keeps its range, i.e. H is
// hereditary (r(e) in H forces s(e) in H).  Required by reduce().
bool hereditary_in(const KGraph& g, const std::set<std::string>& h);

}  // namespace kgraph
