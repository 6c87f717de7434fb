#pragma once

#include <random>

#include "plsrd/graph.hpp"

namespace plsrd::fixtures {

/// Uniform random labeled tree on n >= 2 vertices (Pruefer decode).
Graph random_tree(int n, std::mt19937_64& rng);

/// Random spanning tree plus extra_edges additional distinct edges (capped
/// at the complete graph).
Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng);

}  // namespace plsrd::fixtures
