#include "plsrd/fixtures.hpp"

#include <algorithm>
#include <set>

#include "plsrd/errors.hpp"

namespace plsrd::fixtures {

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 2) throw InvalidOptions("random tree needs n >= 2");
    if (n == 2) return Graph(2, {{0, 1}});
    // Pruefer decode: uniform over labeled trees.
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = pick(rng);
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    Graph tree = random_tree(n, rng);
    std::set<Edge> present(tree.edges().begin(), tree.edges().end());
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.count({u, v})) missing.emplace_back(u, v);
    std::shuffle(missing.begin(), missing.end(), rng);
    std::vector<Edge> edges = tree.edges();
    const int take = std::min<int>(extra_edges, static_cast<int>(missing.size()));
    edges.insert(edges.end(), missing.begin(), missing.begin() + take);
    return Graph(n, std::move(edges));
}

}  // namespace plsrd::fixtures
