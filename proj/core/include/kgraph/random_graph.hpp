#pragma once

#include <random>

#include "kgraph/graph.hpp"

namespace kgraph {

// Random acyclic 2-graph on at most max_vertices vertices: both colour
// adjacency counts are strictly triangular (so the 1-skeleton is acyclic)
// and are resampled until they commute, which makes a factorisation
// bijection possible; the bijection itself is a uniform shuffle.
KGraph random_acyclic_2graph(std::mt19937& rng, int max_vertices = 6);

}  // namespace kgraph
