#include "kgraph/path.hpp"

#include <algorithm>
#include <set>

namespace kgraph {

namespace {

int edge_color(const KGraph& g, int e) { return g.edges[static_cast<size_t>(e)].color; }

Degree word_degree(const KGraph& g, const std::vector<int>& word, int k) {
    Degree d = zero_degree(k);
    for (int e : word) ++d[static_cast<size_t>(edge_color(g, e) - 1)];
    return d;
}

// rewrites a descending adjacent pair into ascending color order
void flip_down(const KGraph& g, std::vector<int>& word, size_t i) {
    auto it = g.flip_bwd.find({word[i], word[i + 1]});
    if (it == g.flip_bwd.end())
        throw Error(errc::non_bijective_squares,
                    "no square covers the pair (" + g.edge_names[static_cast<size_t>(word[i])] +
                        "," + g.edge_names[static_cast<size_t>(word[i + 1])] + ")");
    word[i] = it->second.first;
    word[i + 1] = it->second.second;
}

// rewrites an ascending adjacent pair, pulling the higher color forward
void flip_up(const KGraph& g, std::vector<int>& word, size_t i) {
    auto it = g.flip_fwd.find({word[i], word[i + 1]});
    if (it == g.flip_fwd.end())
        throw Error(errc::non_bijective_squares,
                    "no square covers the pair (" + g.edge_names[static_cast<size_t>(word[i])] +
                        "," + g.edge_names[static_cast<size_t>(word[i + 1])] + ")");
    word[i] = it->second.first;
    word[i + 1] = it->second.second;
}

}  // namespace

Path vertex_path(const KGraph& g, int v) {
    if (v < 0 || static_cast<size_t>(v) >= g.vertex_count())
        throw Error(errc::unknown_id, "vertex index " + std::to_string(v) + " out of range");
    return Path{v, {}, zero_degree(g.k)};
}

Path edge_path(const KGraph& g, int e) {
    if (e < 0 || static_cast<size_t>(e) >= g.edge_count())
        throw Error(errc::unknown_id, "edge index " + std::to_string(e) + " out of range");
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.dst < 0)
        throw Error(errc::not_composable,
                    "edge '" + g.edge_names[static_cast<size_t>(e)] + "' has no range vertex");
    return Path{ed.dst, {e}, unit_degree(g.k, ed.color)};
}

int source(const KGraph& g, const Path& p) {
    if (p.word.empty()) return p.v;
    return g.edges[static_cast<size_t>(p.word.back())].src;
}

Path make_path(const KGraph& g, int v, const std::vector<int>& word) {
    if (v < 0 || static_cast<size_t>(v) >= g.vertex_count())
        throw Error(errc::unknown_id, "vertex index " + std::to_string(v) + " out of range");
    for (int e : word)
        if (e < 0 || static_cast<size_t>(e) >= g.edge_count())
            throw Error(errc::unknown_id, "edge index " + std::to_string(e) + " out of range");
    if (!word.empty() && g.edges[static_cast<size_t>(word[0])].dst != v)
        throw Error(errc::not_composable,
                    "edge '" + g.edge_names[static_cast<size_t>(word[0])] +
                        "' does not end at vertex '" + g.vertex_names[static_cast<size_t>(v)] + "'");
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (g.edges[static_cast<size_t>(word[i])].src !=
            g.edges[static_cast<size_t>(word[i + 1])].dst)
            throw Error(errc::not_composable,
                        "edges '" + g.edge_names[static_cast<size_t>(word[i])] + "' and '" +
                            g.edge_names[static_cast<size_t>(word[i + 1])] +
                            "' do not compose");
    Path p{v, word, word_degree(g, word, g.k)};
    // bubble the word into ascending color order; every swap removes one
    // inversion, so this terminates
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < p.word.size(); ++i) {
            if (edge_color(g, p.word[i]) > edge_color(g, p.word[i + 1])) {
                flip_down(g, p.word, i);
                changed = true;
            }
        }
    }
    return p;
}

Path compose(const KGraph& g, const Path& mu, const Path& nu) {
    if (source(g, mu) != nu.v)
        throw Error(errc::not_composable, "source of '" + path_to_string(g, mu) +
                                              "' is not the range of '" + path_to_string(g, nu) +
                                              "'");
    std::vector<int> word = mu.word;
    word.insert(word.end(), nu.word.begin(), nu.word.end());
    return make_path(g, mu.v, word);
}

std::pair<Path, Path> factor(const KGraph& g, const Path& p, const Degree& m) {
    if (static_cast<int>(m.size()) != g.k)
        throw Error(errc::degree_out_of_range, "degree has wrong rank");
    for (int x : m)
        if (x < 0) throw Error(errc::degree_out_of_range, "degree is negative");
    if (!degree_leq(m, p.deg))
        throw Error(errc::degree_out_of_range, "degree " + degree_to_string(m) +
                                                   " exceeds path degree " +
                                                   degree_to_string(p.deg));
    std::vector<int> remaining = p.word;
    std::vector<int> head;
    for (int c = 1; c <= g.k; ++c) {
        for (int t = 0; t < m[static_cast<size_t>(c - 1)]; ++t) {
            size_t i = 0;
            while (edge_color(g, remaining[i]) != c) ++i;
            // commute the edge to the front, then take it
            while (i > 0) {
                flip_up(g, remaining, i - 1);
                --i;
            }
            head.push_back(remaining.front());
            remaining.erase(remaining.begin());
        }
    }
    Path hp{p.v, head, m};
    Path tp{source(g, hp), remaining, degree_sub(p.deg, m)};
    return {hp, tp};
}

Path segment(const KGraph& g, const Path& p, const Degree& m, const Degree& n) {
    if (static_cast<int>(m.size()) != g.k || static_cast<int>(n.size()) != g.k)
        throw Error(errc::degree_out_of_range, "degree has wrong rank");
    if (!degree_leq(m, n))
        throw Error(errc::degree_out_of_range, "interval bounds " + degree_to_string(m) + " and " +
                                                   degree_to_string(n) + " are not ordered");
    return factor(g, factor(g, p, n).first, m).second;
}

std::vector<Path> paths_from(const KGraph& g, int v, const Degree& n) {
    if (static_cast<int>(n.size()) != g.k)
        throw Error(errc::degree_out_of_range, "degree has wrong rank");
    std::vector<Path> out;
    if (v < 0) return out;
    for (int x : n)
        if (x < 0) return out;
    if (is_zero_degree(n)) {
        out.push_back(vertex_path(g, v));
        return out;
    }
    int c = 1;
    while (n[static_cast<size_t>(c - 1)] == 0) ++c;
    Degree rest = n;
    --rest[static_cast<size_t>(c - 1)];
    for (int e : g.edges_into(v, c)) {
        for (const Path& tail : paths_from(g, g.edges[static_cast<size_t>(e)].src, rest)) {
            Path p{v, {}, n};
            p.word.reserve(tail.word.size() + 1);
            p.word.push_back(e);
            p.word.insert(p.word.end(), tail.word.begin(), tail.word.end());
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> lambda_leq(const KGraph& g, int v, const Degree& n) {
    std::vector<Path> out;
    for (const Degree& m : degrees_upto(n)) {
        for (Path& p : paths_from(g, v, m)) {
            int s = source(g, p);
            bool boundary = true;
            for (int i = 1; i <= g.k; ++i) {
                if (m[static_cast<size_t>(i - 1)] < n[static_cast<size_t>(i - 1)] &&
                    !g.edges_into(s, i).empty()) {
                    boundary = false;
                    break;
                }
            }
            if (boundary) out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Path, Path>> lambda_min(const KGraph& g, const Path& mu, const Path& nu) {
    std::vector<std::pair<Path, Path>> out;
    if (mu.v != nu.v) return out;
    Degree join = degree_join(mu.deg, nu.deg);
    for (const Path& alpha : paths_from(g, source(g, mu), degree_sub(join, mu.deg))) {
        Path tau = compose(g, mu, alpha);
        auto [head, beta] = factor(g, tau, nu.deg);
        if (head == nu) out.emplace_back(alpha, beta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> mce(const KGraph& g, const Path& mu, const Path& nu) {
    std::set<Path> acc;
    for (const auto& [alpha, beta] : lambda_min(g, mu, nu)) acc.insert(compose(g, mu, alpha));
    return {acc.begin(), acc.end()};
}

std::vector<Path> ce(const KGraph& g, const Path& mu, const Path& nu, const Degree& cap) {
    std::vector<Path> out;
    if (mu.v != nu.v) return out;
    Degree join = degree_join(mu.deg, nu.deg);
    for (const Degree& m : degrees_upto(cap)) {
        if (!degree_leq(join, m)) continue;
        for (Path& tau : paths_from(g, mu.v, m)) {
            if (factor(g, tau, mu.deg).first != mu) continue;
            if (factor(g, tau, nu.deg).first != nu) continue;
            out.push_back(std::move(tau));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> mce_of_set(const KGraph& g, const std::vector<Path>& set) {
    if (set.empty())
        throw Error(errc::empty_set, "minimal common extensions need a non-empty set");
    int v = set[0].v;
    Degree join = zero_degree(g.k);
    for (const Path& p : set) {
        if (p.v != v)
            throw Error(errc::mixed_ranges, "paths '" + path_to_string(g, set[0]) + "' and '" +
                                                path_to_string(g, p) +
                                                "' have different ranges");
        join = degree_join(join, p.deg);
    }
    std::vector<Path> out;
    for (Path& tau : paths_from(g, v, join)) {
        bool all = true;
        for (const Path& p : set)
            if (factor(g, tau, p.deg).first != p) {
                all = false;
                break;
            }
        if (all) out.push_back(std::move(tau));
    }
    return out;
}

std::vector<Path> ext(const KGraph& g, const Path& mu, const std::vector<Path>& e) {
    std::set<Path> acc;
    for (const Path& lam : e) {
        if (lam.v != mu.v)
            throw Error(errc::range_mismatch, "path '" + path_to_string(g, lam) +
                                                  "' does not share the range of '" +
                                                  path_to_string(g, mu) + "'");
        for (const auto& [alpha, beta] : lambda_min(g, lam, mu)) acc.insert(beta);
    }
    return {acc.begin(), acc.end()};
}

std::vector<Path> all_paths(const KGraph& g, const Degree& cap) {
    std::vector<Path> out;
    for (size_t v = 0; v < g.vertex_count(); ++v)
        for (const Degree& m : degrees_upto(cap))
            for (Path& p : paths_from(g, static_cast<int>(v), m)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> all_paths(const KGraph& g) { return all_paths(g, natural_cap(g)); }

Degree natural_cap(const KGraph& g) {
    if (!predicates(g).acyclic)
        throw Error(errc::not_acyclic, "path degrees are unbounded on a graph with cycles");
    Degree cap = zero_degree(g.k);
    // longest chain of each color ending at each vertex
    for (int c = 1; c <= g.k; ++c) {
        std::vector<int> best(g.vertex_count(), -1);
        auto chain = [&](auto&& self, int v) -> int {
            int& b = best[static_cast<size_t>(v)];
            if (b >= 0) return b;
            b = 0;
            for (int e : g.edges_into(v, c))
                b = std::max(b, 1 + self(self, g.edges[static_cast<size_t>(e)].src));
            return b;
        };
        for (size_t v = 0; v < g.vertex_count(); ++v)
            cap[static_cast<size_t>(c - 1)] =
                std::max(cap[static_cast<size_t>(c - 1)], chain(chain, static_cast<int>(v)));
    }
    return cap;
}

std::string path_to_string(const KGraph& g, const Path& p) {
    if (p.word.empty()) return g.vertex_names[static_cast<size_t>(p.v)];
    std::string s;
    for (size_t i = 0; i < p.word.size(); ++i) {
        if (i) s += '.';
        s += g.edge_names[static_cast<size_t>(p.word[i])];
    }
    return s;
}

std::vector<Degree> degrees_upto(const Degree& n) {
    std::vector<Degree> out;
    for (int x : n)
        if (x < 0) return out;
    Degree m = zero_degree(static_cast<int>(n.size()));
    while (true) {
        out.push_back(m);
        size_t i = n.size();
        while (i > 0) {
            --i;
            if (m[i] < n[i]) {
                ++m[i];
                for (size_t j = i + 1; j < n.size(); ++j) m[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (n.empty()) return out;
    }
}

}  // namespace kgraph
