#pragma once

#include <set>
#include <string>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/io.hpp"
#include "kgraph/path.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline kgraph::KGraph load_fixture(const std::string& name) {
    return kgraph::validate(kgraph::load_kgraph_file(fixture_path(name)));
}

// Every path with range v, grown edge by edge from the trivial path.  Uses
// only make_path, so the enumeration helpers it cross-checks play no part.
// Acyclic graphs only.
inline std::vector<kgraph::Path> grow_paths_at(const kgraph::KGraph& g, int v) {
    std::set<kgraph::Path> seen;
    std::vector<kgraph::Path> frontier{kgraph::vertex_path(g, v)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<kgraph::Path> next;
        for (const kgraph::Path& p : frontier) {
            int sp = kgraph::source(g, p);
            for (size_t e = 0; e < g.edge_count(); ++e) {
                if (g.edges[e].dst != sp) continue;
                std::vector<int> word = p.word;
                word.push_back(static_cast<int>(e));
                kgraph::Path q = kgraph::make_path(g, v, word);
                if (seen.insert(q).second) next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<kgraph::Path>(seen.begin(), seen.end());
}

// p is the range-end segment of q
inline bool extends(const kgraph::KGraph& g, const kgraph::Path& q, const kgraph::Path& p) {
    if (q.v != p.v || !kgraph::degree_leq(p.deg, q.deg)) return false;
    return kgraph::factor(g, q, p.deg).first == p;
}

// The definition read off directly: every path at v has a common extension
// with some member.  Common extensions live at v, so scanning vLambda for
// the witness is enough on an acyclic graph.
inline bool oracle_exhaustive(const kgraph::KGraph& g, int v,
                              const std::vector<kgraph::Path>& members) {
    std::vector<kgraph::Path> at_v = grow_paths_at(g, v);
    for (const kgraph::Path& p : at_v) {
        bool met = false;
        for (const kgraph::Path& m : members) {
            if (m.v != v) continue;
            for (const kgraph::Path& q : at_v) {
                if (extends(g, q, p) && extends(g, q, m)) {
                    met = true;
                    break;
                }
            }
            if (met) break;
        }
        if (!met) return false;
    }
    return true;
}

}  // namespace support
