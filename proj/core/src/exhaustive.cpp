#include "kgraph/exhaustive.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kgraph {

namespace {

using State = std::vector<Path>;  // sorted, all sharing one range vertex

bool has_vertex_path(const State& s) {
    for (const Path& p : s)
        if (p.word.empty()) return true;
    return false;
}

std::vector<FESet> enumerate_subsets(const KGraph& g, int v, const std::vector<Path>& pool,
                                     std::uint64_t budget, bool minimal_only) {
    if (pool.size() >= 63)
        throw Error(errc::budget_exceeded,
                    "subset space too large (" + std::to_string(pool.size()) + " candidates)");
    std::uint64_t total = std::uint64_t{1} << pool.size();
    std::uint64_t examined = 0;
    std::vector<std::uint64_t> found_masks;
    std::vector<FESet> out;
    // size-ascending enumeration makes the minimal-only filter a subset
    // test against earlier hits
    std::vector<std::uint64_t> order;
    order.reserve(static_cast<size_t>(total) - 1);
    for (std::uint64_t m = 1; m < total; ++m) order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (std::uint64_t mask : order) {
        if (++examined > budget)
            throw Error(errc::budget_exceeded,
                        "examined more than " + std::to_string(budget) + " subsets");
        if (minimal_only) {
            bool dominated = false;
            for (std::uint64_t f : found_masks)
                if ((f & mask) == f) {
                    dominated = true;
                    break;
                }
            if (dominated) continue;
        }
        State e;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) e.push_back(pool[i]);
        if (is_exhaustive(g, v, e).exhaustive) {
            if (minimal_only) found_masks.push_back(mask);
            out.push_back(FESet{v, std::move(e)});
        }
    }
    return out;
}

}  // namespace

ExhaustiveCheck is_exhaustive(const KGraph& g, int v, const std::vector<Path>& e) {
    if (v < 0 || static_cast<size_t>(v) >= g.vertex_count())
        throw Error(errc::unknown_id, "vertex index " + std::to_string(v) + " out of range");
    for (const Path& p : e)
        if (p.v != v)
            throw Error(errc::range_mismatch, "set member '" + path_to_string(g, p) +
                                                  "' does not have range '" +
                                                  g.vertex_names[static_cast<size_t>(v)] + "'");

    struct Node {
        int vertex;
        State state;
        int parent;
        int edge;
    };
    std::vector<Node> nodes;
    std::set<std::pair<int, State>> seen;

    State init = e;
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());
    nodes.push_back(Node{v, std::move(init), -1, -1});
    seen.insert({v, nodes[0].state});

    auto witness_at = [&](int idx) {
        std::vector<int> word;
        for (int cur = idx; nodes[static_cast<size_t>(cur)].parent >= 0;
             cur = nodes[static_cast<size_t>(cur)].parent)
            word.push_back(nodes[static_cast<size_t>(cur)].edge);
        std::reverse(word.begin(), word.end());
        return make_path(g, v, word);
    };

    for (size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].state.empty())
            return ExhaustiveCheck{false, witness_at(static_cast<int>(head))};
        // a degree-0 member means E already covers everything past this
        // point; nothing reachable from here can fail
        if (has_vertex_path(nodes[head].state)) continue;
        int w = nodes[head].vertex;
        for (int c = 1; c <= g.k; ++c) {
            for (int f : g.edges_into(w, c)) {
                Path fp = edge_path(g, f);
                std::set<Path> next;
                for (const Path& beta : nodes[head].state)
                    for (const auto& [alpha, gamma] : lambda_min(g, beta, fp)) {
                        (void)alpha;
                        next.insert(gamma);
                    }
                State ns(next.begin(), next.end());
                int nv = g.edges[static_cast<size_t>(f)].src;
                if (!seen.insert({nv, ns}).second) continue;
                nodes.push_back(Node{nv, std::move(ns), static_cast<int>(head), f});
            }
        }
    }
    return ExhaustiveCheck{true, std::nullopt};
}

std::vector<FESet> enumerate_edge_fe_sets(const KGraph& g, int v, std::uint64_t budget,
                                          bool minimal_only) {
    std::vector<Path> pool;
    for (int c = 1; c <= g.k; ++c)
        for (int f : g.edges_into(v, c)) pool.push_back(edge_path(g, f));
    return enumerate_subsets(g, v, pool, budget, minimal_only);
}

std::vector<FESet> enumerate_fe_sets(const KGraph& g, int v, const Degree& cap,
                                     std::uint64_t budget) {
    std::vector<Path> pool;
    for (const Degree& m : degrees_upto(cap)) {
        if (is_zero_degree(m)) continue;
        for (Path& p : paths_from(g, v, m)) pool.push_back(std::move(p));
    }
    std::sort(pool.begin(), pool.end());
    return enumerate_subsets(g, v, pool, budget, false);
}

}  // namespace kgraph
