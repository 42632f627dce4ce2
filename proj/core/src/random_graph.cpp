#include "kgraph/random_graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kgraph/errors.hpp"

namespace kgraph {

namespace {

using CountMatrix = std::vector<std::vector<int>>;

// counts[src][dst], nonzero only below the diagonal
CountMatrix sample_counts(std::mt19937& rng, int n) {
    CountMatrix m(n, std::vector<int>(n, 0));
    std::uniform_int_distribution<int> entry(0, 9);
    for (int u = 1; u < n; ++u)
        for (int v = 0; v < u; ++v) {
            int r = entry(rng);
            m[u][v] = r < 6 ? 0 : (r < 9 ? 1 : 2);
        }
    return m;
}

bool commute(const CountMatrix& a, const CountMatrix& b) {
    int n = static_cast<int>(a.size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            long ab = 0, ba = 0;
            for (int w = 0; w < n; ++w) {
                ab += long{a[u][w]} * b[w][v];
                ba += long{b[u][w]} * a[w][v];
            }
            if (ab != ba) return false;
        }
    return true;
}

}  // namespace

KGraph random_acyclic_2graph(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        int n = nv(rng);
        CountMatrix c1 = sample_counts(rng, n);
        CountMatrix c2 = sample_counts(rng, n);
        if (!commute(c1, c2)) continue;

        KGraphSpec spec;
        spec.k = 2;
        for (int v = 0; v < n; ++v) spec.vertices.push_back("v" + std::to_string(v));
        // edge ids indexed by (color, src, dst, copy)
        auto emit_edges = [&](const CountMatrix& c, int color, char prefix) {
            int count = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    for (int copy = 0; copy < c[u][v]; ++copy) {
                        EdgeSpec e;
                        e.id = std::string(1, prefix) + std::to_string(count++);
                        e.color = color;
                        e.src = spec.vertices[u];
                        e.dst = spec.vertices[v];
                        spec.edges.push_back(std::move(e));
                    }
        };
        emit_edges(c1, 1, 'a');
        emit_edges(c2, 2, 'b');

        // group edges by endpoints for the square construction
        auto edges_with = [&](int color, int src, int dst) {
            std::vector<std::string> ids;
            for (const EdgeSpec& e : spec.edges)
                if (e.color == color && e.src == spec.vertices[src] && e.dst == spec.vertices[dst])
                    ids.push_back(e.id);
            return ids;
        };

        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) {
                // colour-1-then-colour-2 words from u into v, and the flips
                std::vector<std::pair<std::string, std::string>> first, second;
                for (int w = 0; w < n; ++w) {
                    for (const std::string& f : edges_with(1, w, v))
                        for (const std::string& g : edges_with(2, u, w))
                            first.emplace_back(f, g);
                    for (const std::string& gp : edges_with(2, w, v))
                        for (const std::string& fp : edges_with(1, u, w))
                            second.emplace_back(gp, fp);
                }
                if (first.size() != second.size())
                    throw Error(errc::non_bijective_squares, "commuting counts out of step");
                std::shuffle(second.begin(), second.end(), rng);
                for (size_t i = 0; i < first.size(); ++i)
                    spec.squares.push_back(SquareSpec{
                        first[i].first, first[i].second, second[i].first, second[i].second});
            }
        return validate(spec);
    }
    throw Error(errc::budget_exceeded, "no commuting sample found");
}

}  // namespace kgraph
