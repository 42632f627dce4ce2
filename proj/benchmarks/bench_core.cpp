#include <benchmark/benchmark.h>

#include <string>

#include "kgraph/algebra.hpp"
#include "kgraph/exhaustive.hpp"
#include "kgraph/graph.hpp"
#include "kgraph/ideal.hpp"
#include "kgraph/io.hpp"
#include "kgraph/path.hpp"

using namespace kgraph;

namespace {

KGraph load(const std::string& name) {
    return validate(load_kgraph_file(std::string(FIXTURES_DIR) + "/" + name));
}

void bm_parse(benchmark::State& state) {
    KGraph g = load("receivers.kg");
    std::string text = serialize(to_spec(g));
    for (auto _ : state) {
        KGraphSpec spec = parse_kgraph(text);
        benchmark::DoNotOptimize(spec.edges.size());
    }
}
BENCHMARK(bm_parse);

void bm_all_paths(benchmark::State& state) {
    KGraph g = load("ladder.kg");
    Degree cap = natural_cap(g);
    for (auto _ : state) {
        std::vector<Path> ps = all_paths(g, cap);
        benchmark::DoNotOptimize(ps.size());
    }
}
BENCHMARK(bm_all_paths);

void bm_lambda_min(benchmark::State& state) {
    KGraph g = load("receivers.kg");
    std::vector<Path> ps = all_paths(g, natural_cap(g));
    for (auto _ : state) {
        size_t total = 0;
        for (const Path& a : ps)
            for (const Path& b : ps) total += lambda_min(g, a, b).size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(bm_lambda_min);

void bm_is_exhaustive(benchmark::State& state) {
    KGraph g = load("receivers.kg");
    int v = g.vertex_index("v");
    std::vector<Path> members;
    for (int e : g.edges_into(v, 1)) members.push_back(edge_path(g, e));
    for (auto _ : state) {
        ExhaustiveCheck chk = is_exhaustive(g, v, members);
        benchmark::DoNotOptimize(chk.exhaustive);
    }
}
BENCHMARK(bm_is_exhaustive);

void bm_mul(benchmark::State& state) {
    KGraph g = load("square.kg");
    std::vector<Monomial> monos = all_monomials(g, natural_cap(g));
    for (auto _ : state) {
        AlgebraElement acc = zero_element(g);
        for (const Monomial& a : monos)
            for (const Monomial& b : monos)
                acc = add(acc, mul(g, monomial_element(g, a.lambda, a.mu),
                                   monomial_element(g, b.lambda, b.mu)));
        benchmark::DoNotOptimize(acc.terms.size());
    }
}
BENCHMARK(bm_mul);

void bm_ck_ideal(benchmark::State& state) {
    KGraph g = load("receivers.kg");
    for (auto _ : state) {
        IdealBasis basis = ck_ideal(g);
        benchmark::DoNotOptimize(basis.dimension());
    }
}
BENCHMARK(bm_ck_ideal);

}  // namespace

BENCHMARK_MAIN();
