#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/graph.hpp"

namespace kgraph {

// A path is stored in canonical form: the edge word is sorted by color
// (all color-1 edges first, then color-2, ...), reading from the range
// inward.  word[0] is the edge whose dst is the range vertex v; the source
// of the path is the src of the last edge.  Vertex paths have empty words.
struct Path {
    int v = -1;              // range vertex
    std::vector<int> word;   // edge indices, canonical order
    Degree deg;              // cached degree

    friend bool operator==(const Path& a, const Path& b) {
        return a.v == b.v && a.word == b.word;
    }
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.v != b.v) return a.v < b.v;
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.word < b.word;
    }
};

Path vertex_path(const KGraph& g, int v);
Path edge_path(const KGraph& g, int e);

// source vertex; -1 when the path ends at a dangling edge
int source(const KGraph& g, const Path& p);

// builds a path from a composable edge word (range-first), normalizing the
// color order; throws NotComposable on broken chains
Path make_path(const KGraph& g, int v, const std::vector<int>& word);

// mu then nu, requires s(mu) = r(nu)
Path compose(const KGraph& g, const Path& mu, const Path& nu);

// splits p = head . tail with d(head) = m; requires m <= d(p)
std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m);

// lambda(m, n) in the usual interval notation; requires m <= n <= d(p)
Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n);

// all paths of degree exactly n with range v, sorted
std::vector<Path> paths_from(const KGraph& g, int v, const Degree& n);

// v Lambda^{<= n}: degree <= n, and no color can be extended further
// within the bound
std::vector<Path> lambda_leq(const KGraph& g, int v, const Degree& n);

// minimal common extensions as pairs (alpha, beta) with mu.alpha = nu.beta
std::vector<std::pair<Path, Path>> lambda_min(const KGraph& g, const Path& mu, const Path& nu);

// the extensions themselves: mu.alpha over (alpha, beta) in lambda_min
std::vector<Path> mce(const KGraph& g, const Path& mu, const Path& nu);

// common extensions with degree <= cap
std::vector<Path> ce(const KGraph& g, const Path& mu, const Path& nu, const Degree& cap);

// minimal common extensions of a finite set with common range (MixedRanges
// otherwise); empty set is rejected the same way
std::vector<Path> mce_of_set(const KGraph& g, const std::vector<Path>& set);

// Ext(mu; E) = { beta : (alpha, beta) in Lambda^min(lambda, mu), lambda in E };
// requires r(mu) = r(lambda) for every lambda in E (RangeMismatch)
std::vector<Path> ext(const KGraph& g, const Path& mu, const std::vector<Path>& e);

// every path of degree <= cap, sorted
std::vector<Path> all_paths(const KGraph& g, const Degree& cap);

// on acyclic graphs: every path, using the natural degree bound
std::vector<Path> all_paths(const KGraph& g);

// largest degree any path can have; requires acyclic
Degree natural_cap(const KGraph& g);

// dot-joined edge ids, or the vertex name for degree 0
std::string path_to_string(const KGraph& g, const Path& p);

// all degrees m with 0 <= m <= n, lexicographic
std::vector<Degree> degrees_upto(const Degree& n);

}  // namespace kgraph
