#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "plsrd/graph.hpp"
#include "plsrd/labeling.hpp"

namespace plsrd {

enum class Algorithm { BruteForce, Backtracking };

struct SolveOptions {
    Algorithm algorithm = Algorithm::Backtracking;
    int workers = 1;
    std::optional<std::uint64_t> node_budget;
    std::optional<double> time_budget_seconds;
    /// Valid labeling used as the initial incumbent (typically a
    /// construction certificate). Rejected via InvalidOptions if it does
    /// not validate on the graph.
    std::optional<Labeling> warm_start;
};

struct SolveResult {
    int optimum = 0;
    Labeling witness;
    std::uint64_t nodes_explored = 0;
    bool proven_optimal = false;
    Algorithm algorithm = Algorithm::Backtracking;
};

/// Enumerates all 3^n labelings in lexicographic order (-1 < 1 < 2) and
/// returns the minimum weight with the lexicographically smallest witness.
/// Hard guard n <= 16; throws TooLarge beyond it.
SolveResult brute_force(const Graph& g);

/// Depth-first branch and bound. Vertices are branched in descending degree
/// order (ties by index), values in order 1, 2, -1. A partial assignment is
/// pruned when a decided weak vertex has no possible or two actual guards,
/// a strong vertex already serves two weak ones, a fully decided closed
/// neighborhood sums below 1, or the optimistic completion bound reaches the
/// incumbent. Always returns a valid witness (all-ones fallback);
/// proven_optimal is false iff a budget stopped the search.
SolveResult solve(const Graph& g, const SolveOptions& opts = {});

/// Calls fn for every labeling with an empty validation report, in
/// lexicographic order. Guard n <= 14.
void for_each_valid(const Graph& g, const std::function<void(const Labeling&)>& fn);

std::vector<Labeling> enumerate_valid(const Graph& g);

}  // namespace plsrd
