#include "plsrd/graph.hpp"

#include <algorithm>
#include <queue>

#include "plsrd/errors.hpp"

namespace plsrd {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw InvalidGraph("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidGraph("edge endpoint out of range");
        if (u == v) throw InvalidGraph("self-loop not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidGraph("duplicate edge");
    edges_ = std::move(edges);

    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    flat_.resize(offsets_.back());
    std::vector<int> next(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        flat_[next[u]++] = v;
        flat_[next[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(flat_.begin() + offsets_[v], flat_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

bool Graph::within_distance(int u, int v, int d) const {
    if (u == v) return true;
    if (d <= 0) return false;
    std::vector<int> dist(n_, -1);
    std::queue<int> queue;
    dist[u] = 0;
    queue.push(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        if (dist[x] == d) continue;
        for (int y : neighbors(x)) {
            if (dist[y] != -1) continue;
            if (y == v) return true;
            dist[y] = dist[x] + 1;
            queue.push(y);
        }
    }
    return false;
}

}  // namespace plsrd
