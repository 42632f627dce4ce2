#include "kgraph/graph.hpp"

#include <algorithm>
#include <atomic>

namespace kgraph {

const char* errc_name(errc c) {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::unknown_id: return "UnknownId";
        case errc::dangling_edge_endpoint: return "DanglingEdgeEndpoint";
        case errc::non_bijective_squares: return "NonBijectiveSquares";
        case errc::inconsistent_triple: return "InconsistentTriple";
        case errc::not_composable: return "NotComposable";
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::mixed_ranges: return "MixedRanges";
        case errc::range_mismatch: return "RangeMismatch";
        case errc::graph_mismatch: return "GraphMismatch";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::closed_form_disagreement: return "ClosedFormDisagreement";
        case errc::not_acyclic: return "NotAcyclic";
        case errc::not_locally_convex: return "NotLocallyConvex";
        case errc::not_in_phi_image: return "NotInPhiImage";
        case errc::mixed_degrees: return "MixedDegrees";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::empty_set: return "EmptySet";
        case errc::not_exhaustive: return "NotExhaustive";
        case errc::l_budget_exceeded: return "LBudgetExceeded";
        case errc::identity_failure: return "IdentityFailure";
    }
    return "UnknownError";
}

namespace {

std::uint64_t next_uid() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

const std::vector<int> k_no_edges;

}  // namespace

// shared skeleton construction for validate() and the unchecked builders
struct GraphBuilder {
    static void build(KGraph& g, const KGraphSpec& spec, bool allow_dangling);
};

void GraphBuilder::build(KGraph& g, const KGraphSpec& spec, bool allow_dangling) {
    g.k = spec.k;
    g.uid = next_uid();
    g.vertex_names = spec.vertices;
    for (size_t i = 0; i < g.vertex_names.size(); ++i) {
        auto [it, fresh] = g.vertex_pos_.emplace(g.vertex_names[i], static_cast<int>(i));
        (void)it;
        if (!fresh)
            throw Error(errc::parse_error, "duplicate vertex id '" + g.vertex_names[i] + "'");
        if (g.vertex_names[i].empty())
            throw Error(errc::parse_error, "empty vertex id");
    }
    for (const auto& e : spec.edges) {
        if (e.id.empty()) throw Error(errc::parse_error, "empty edge id");
        if (e.color < 1 || e.color > g.k)
            throw Error(errc::parse_error,
                        "edge '" + e.id + "' has color " + std::to_string(e.color) +
                            " outside 1.." + std::to_string(g.k));
        int src = g.vertex_index(e.src);
        if (src < 0)
            throw Error(errc::dangling_edge_endpoint,
                        "edge '" + e.id + "' has unknown source vertex '" + e.src + "'");
        int dst = g.vertex_index(e.dst);
        if (dst < 0 && !allow_dangling)
            throw Error(errc::dangling_edge_endpoint,
                        "edge '" + e.id + "' has unknown range vertex '" + e.dst + "'");
        int idx = static_cast<int>(g.edges.size());
        auto [it, fresh] = g.edge_pos_.emplace(e.id, idx);
        (void)it;
        if (!fresh) throw Error(errc::parse_error, "duplicate edge id '" + e.id + "'");
        g.edge_names.push_back(e.id);
        g.edges.push_back(Edge{e.color, src, dst});
        if (dst < 0) g.cut_ranges[idx] = e.dst;
    }
    g.incoming.assign(g.vertex_count(), std::vector<std::vector<int>>(static_cast<size_t>(g.k)));
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.dst >= 0)
            g.incoming[static_cast<size_t>(e.dst)][static_cast<size_t>(e.color - 1)].push_back(
                static_cast<int>(i));
    }
    for (const auto& sq : spec.squares) {
        Square s;
        auto resolve = [&](const std::string& id) {
            int idx = g.edge_index(id);
            if (idx < 0)
                throw Error(errc::unknown_id, "square refers to unknown edge '" + id + "'");
            return idx;
        };
        s.f = resolve(sq.f);
        s.g = resolve(sq.g);
        s.gp = resolve(sq.gp);
        s.fp = resolve(sq.fp);
        const Edge &f = g.edges[static_cast<size_t>(s.f)], &gg = g.edges[static_cast<size_t>(s.g)],
                   &gp = g.edges[static_cast<size_t>(s.gp)], &fp = g.edges[static_cast<size_t>(s.fp)];
        std::string label = "(" + sq.f + "," + sq.g + "," + sq.gp + "," + sq.fp + ")";
        if (f.color != fp.color || gg.color != gp.color || f.color >= gg.color)
            throw Error(errc::non_bijective_squares,
                        "square " + label + " violates the color pattern i<j");
        if (f.src != gg.dst || gp.src != fp.dst || f.dst != gp.dst || gg.src != fp.src)
            throw Error(errc::non_bijective_squares,
                        "square " + label + " has mismatched endpoints");
        g.squares.push_back(s);
        auto key = std::make_pair(s.f, s.g);
        auto val = std::make_pair(s.gp, s.fp);
        if (!g.flip_fwd.emplace(key, val).second)
            throw Error(errc::non_bijective_squares,
                        "pair (" + sq.f + "," + sq.g + ") appears in two squares");
        if (!g.flip_bwd.emplace(val, key).second)
            throw Error(errc::non_bijective_squares,
                        "pair (" + sq.gp + "," + sq.fp + ") appears in two squares");
    }
}

namespace {

// the two ways of reordering an ascending 3-color word [a,b,c] into
// descending order must land on the same word
void check_triple(const KGraph& g, int a, int b, int c) {
    auto flip = [&](int x, int y) {
        auto it = g.flip_fwd.find({x, y});
        if (it == g.flip_fwd.end())
            throw Error(errc::non_bijective_squares,
                        "no square for composable pair (" + g.edge_names[static_cast<size_t>(x)] +
                            "," + g.edge_names[static_cast<size_t>(y)] + ")");
        return it->second;
    };
    // route 1: flip (a,b), then (a,c), then (b,c)
    auto [b1, a1] = flip(a, b);
    auto [c1, a2] = flip(a1, c);
    auto [c2, b2] = flip(b1, c1);
    // route 2: flip (b,c), then (a,c), then (a,b)
    auto [c3, b3] = flip(b, c);
    auto [c4, a3] = flip(a, c3);
    auto [b4, a4] = flip(a3, b3);
    if (c2 != c4 || b2 != b4 || a2 != a4)
        throw Error(errc::inconsistent_triple,
                    "reordering routes disagree on word [" + g.edge_names[static_cast<size_t>(a)] +
                        "," + g.edge_names[static_cast<size_t>(b)] + "," +
                        g.edge_names[static_cast<size_t>(c)] + "]");
}

}  // namespace

int KGraph::vertex_index(const std::string& name) const {
    auto it = vertex_pos_.find(name);
    return it == vertex_pos_.end() ? -1 : it->second;
}

int KGraph::edge_index(const std::string& name) const {
    auto it = edge_pos_.find(name);
    return it == edge_pos_.end() ? -1 : it->second;
}

const std::vector<int>& KGraph::edges_into(int v, int color) const {
    if (v < 0) return k_no_edges;
    return incoming[static_cast<size_t>(v)][static_cast<size_t>(color - 1)];
}

KGraph build_unchecked(const KGraphSpec& spec, int k) {
    KGraph g;
    (void)k;
    GraphBuilder::build(g, spec, /*allow_dangling=*/true);
    return g;
}

KGraph validate(const KGraphSpec& spec) {
    if (spec.k < 0) throw Error(errc::parse_error, "rank k must be non-negative");
    KGraph g;
    GraphBuilder::build(g, spec, /*allow_dangling=*/false);

    // per color pair (i,j): (f,g) -> (gp,fp) must biject composable
    // i-then-j pairs onto composable j-then-i pairs
    for (size_t f = 0; f < g.edges.size(); ++f) {
        for (size_t e = 0; e < g.edges.size(); ++e) {
            const Edge &a = g.edges[f], &b = g.edges[e];
            if (a.src != b.dst) continue;
            std::string pair_label = "(" + g.edge_names[f] + "," + g.edge_names[e] + ")";
            if (a.color < b.color &&
                g.flip_fwd.find({static_cast<int>(f), static_cast<int>(e)}) == g.flip_fwd.end())
                throw Error(errc::non_bijective_squares,
                            "composable pair " + pair_label + " has no square; colors (" +
                                std::to_string(a.color) + "," + std::to_string(b.color) + ")");
            if (a.color > b.color &&
                g.flip_bwd.find({static_cast<int>(f), static_cast<int>(e)}) == g.flip_bwd.end())
                throw Error(errc::non_bijective_squares,
                            "composable pair " + pair_label + " is not the target of any square;"
                                " colors (" + std::to_string(b.color) + "," +
                                std::to_string(a.color) + ")");
        }
    }

    if (g.k >= 3) {
        // exhaustive check over composable ascending 3-color words
        for (size_t b = 0; b < g.edges.size(); ++b) {
            for (size_t a = 0; a < g.edges.size(); ++a) {
                if (g.edges[a].color >= g.edges[b].color) continue;
                if (g.edges[a].src != g.edges[b].dst) continue;
                for (size_t c = 0; c < g.edges.size(); ++c) {
                    if (g.edges[c].color <= g.edges[b].color) continue;
                    if (g.edges[b].src != g.edges[c].dst) continue;
                    check_triple(g, static_cast<int>(a), static_cast<int>(b),
                                 static_cast<int>(c));
                }
            }
        }
    }
    return g;
}

GraphPredicates predicates(const KGraph& g) {
    GraphPredicates p;
    p.edge_counts.assign(static_cast<size_t>(g.k), 0);
    for (const Edge& e : g.edges) ++p.edge_counts[static_cast<size_t>(e.color - 1)];

    p.no_sources = true;
    for (size_t v = 0; v < g.vertex_count() && p.no_sources; ++v)
        for (int c = 1; c <= g.k; ++c)
            if (g.edges_into(static_cast<int>(v), c).empty()) {
                p.no_sources = false;
                break;
            }

    // locally convex: whenever v receives both colors i and j, every color-i
    // edge at v has a color-j edge at its source (and vice versa)
    p.locally_convex = true;
    for (size_t v = 0; v < g.vertex_count() && p.locally_convex; ++v) {
        for (int i = 1; i <= g.k && p.locally_convex; ++i) {
            for (int j = i + 1; j <= g.k && p.locally_convex; ++j) {
                const auto& ei = g.edges_into(static_cast<int>(v), i);
                const auto& ej = g.edges_into(static_cast<int>(v), j);
                if (ei.empty() || ej.empty()) continue;
                for (int f : ei)
                    if (g.edges_into(g.edges[static_cast<size_t>(f)].src, j).empty()) {
                        p.locally_convex = false;
                        break;
                    }
                for (int f : ej)
                    if (g.edges_into(g.edges[static_cast<size_t>(f)].src, i).empty()) {
                        p.locally_convex = false;
                        break;
                    }
            }
        }
    }

    // acyclic iff the 1-skeleton (arrows src -> dst) has no directed cycle
    std::vector<int> state(g.vertex_count(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::vector<int>> out(g.vertex_count());
    for (const Edge& e : g.edges)
        if (e.dst >= 0) out[static_cast<size_t>(e.src)].push_back(e.dst);
    p.acyclic = true;
    auto dfs = [&](auto&& self, int v) -> bool {
        state[static_cast<size_t>(v)] = 1;
        for (int w : out[static_cast<size_t>(v)]) {
            if (state[static_cast<size_t>(w)] == 1) return false;
            if (state[static_cast<size_t>(w)] == 0 && !self(self, w)) return false;
        }
        state[static_cast<size_t>(v)] = 2;
        return true;
    };
    for (size_t v = 0; v < g.vertex_count(); ++v)
        if (state[v] == 0 && !dfs(dfs, static_cast<int>(v))) {
            p.acyclic = false;
            break;
        }
    return p;
}

KGraph remove_color(const KGraph& g, int i) {
    if (i < 1 || i > g.k)
        throw Error(errc::parse_error, "color " + std::to_string(i) + " outside 1.." +
                                           std::to_string(g.k));
    KGraphSpec spec;
    spec.k = g.k - 1;
    spec.vertices = g.vertex_names;
    std::set<std::string> dropped;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.color == i) {
            dropped.insert(g.edge_names[e]);
            continue;
        }
        EdgeSpec es;
        es.id = g.edge_names[e];
        es.color = ed.color < i ? ed.color : ed.color - 1;
        es.src = g.vertex_names[static_cast<size_t>(ed.src)];
        auto cut = g.cut_ranges.find(static_cast<int>(e));
        es.dst = cut != g.cut_ranges.end() ? cut->second
                                           : g.vertex_names[static_cast<size_t>(ed.dst)];
        spec.edges.push_back(es);
    }
    for (const Square& s : g.squares) {
        SquareSpec ss{g.edge_names[static_cast<size_t>(s.f)], g.edge_names[static_cast<size_t>(s.g)],
                      g.edge_names[static_cast<size_t>(s.gp)],
                      g.edge_names[static_cast<size_t>(s.fp)]};
        if (dropped.count(ss.f) || dropped.count(ss.g) || dropped.count(ss.gp) ||
            dropped.count(ss.fp))
            continue;
        spec.squares.push_back(ss);
    }
    if (g.cut_ranges.empty()) return validate(spec);
    return build_unchecked(spec, spec.k);
}

KGraph restrict_to_complement(const KGraph& g, const std::set<std::string>& h) {
    KGraphSpec spec;
    spec.k = g.k;
    for (const auto& v : g.vertex_names)
        if (!h.count(v)) spec.vertices.push_back(v);
    std::set<std::string> kept;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        const std::string& src = g.vertex_names[static_cast<size_t>(ed.src)];
        if (h.count(src)) continue;
        auto cut = g.cut_ranges.find(static_cast<int>(e));
        std::string dst = cut != g.cut_ranges.end() ? cut->second
                                                    : g.vertex_names[static_cast<size_t>(ed.dst)];
        kept.insert(g.edge_names[e]);
        spec.edges.push_back(EdgeSpec{g.edge_names[e], ed.color, src, dst});
    }
    for (const Square& s : g.squares) {
        SquareSpec ss{g.edge_names[static_cast<size_t>(s.f)], g.edge_names[static_cast<size_t>(s.g)],
                      g.edge_names[static_cast<size_t>(s.gp)],
                      g.edge_names[static_cast<size_t>(s.fp)]};
        if (kept.count(ss.f) && kept.count(ss.g) && kept.count(ss.gp) && kept.count(ss.fp))
            spec.squares.push_back(ss);
    }
    return build_unchecked(spec, spec.k);
}

KGraphSpec to_spec(const KGraph& g) {
    KGraphSpec spec;
    spec.k = g.k;
    spec.vertices = g.vertex_names;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        auto cut = g.cut_ranges.find(static_cast<int>(e));
        spec.edges.push_back(EdgeSpec{
            g.edge_names[e], ed.color, g.vertex_names[static_cast<size_t>(ed.src)],
            cut != g.cut_ranges.end() ? cut->second : g.vertex_names[static_cast<size_t>(ed.dst)]});
    }
    for (const Square& s : g.squares)
        spec.squares.push_back(SquareSpec{g.edge_names[static_cast<size_t>(s.f)],
                                          g.edge_names[static_cast<size_t>(s.g)],
                                          g.edge_names[static_cast<size_t>(s.gp)],
                                          g.edge_names[static_cast<size_t>(s.fp)]});
    return spec;
}

bool hereditary_in(const KGraph& g, const std::set<std::string>& h) {
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.dst < 0) continue;  // already dangling in g itself
        const std::string& src = g.vertex_names[static_cast<size_t>(ed.src)];
        const std::string& dst = g.vertex_names[static_cast<size_t>(ed.dst)];
        if (h.count(dst) && !h.count(src)) return false;
    }
    return true;
}

}  // namespace kgraph
