#pragma once

#include <array>
#include <initializer_list>
#include <set>
#include <vector>

#include "plsrd/family.hpp"
#include "plsrd/graph.hpp"
#include "plsrd/labeling.hpp"

namespace plsrd::test {

inline Labeling lab(std::initializer_list<int> values) {
    Labeling f;
    for (int v : values) f.labels.push_back(static_cast<Label>(v));
    return f;
}

// Independent distance oracle (plain BFS), kept apart from
// Graph::within_distance on purpose.
inline int bfs_distance(const Graph& g, int s, int t) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        if (v == t) return dist[v];
        for (int u : g.neighbors(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return -1;
}

// (label, weak/one/strong neighbor counts, closed sum) per vertex.
using Signature = std::array<int, 5>;

inline Signature signature_of(const Graph& g, const Labeling& f, int v) {
    int weak = 0, one = 0, strong = 0, sum = f[v];
    for (int u : g.neighbors(v)) {
        sum += f[u];
        if (f[u] == -1) ++weak;
        if (f[u] == 1) ++one;
        if (f[u] == 2) ++strong;
    }
    return {f[v], weak, one, strong, sum};
}

// Per-class neighbor structure of the flower snark certificates; one row set
// per parity of n.
inline const std::set<Signature>& snark_rows(bool even_n) {
    static const std::set<Signature> even = {
        {2, 1, 2, 0, 3}, {1, 2, 0, 1, 1},  {-1, 1, 1, 1, 1}, {2, 1, 1, 1, 4},
        {-1, 0, 2, 1, 3}, {1, 1, 0, 2, 4}, {2, 1, 0, 2, 5},  {1, 0, 0, 3, 7},
    };
    static const std::set<Signature> odd = {
        {2, 1, 2, 0, 3}, {1, 2, 0, 1, 1},  {-1, 1, 1, 1, 1}, {2, 1, 1, 1, 4},
        {1, 1, 1, 1, 3}, {-1, 0, 2, 1, 3}, {1, 1, 0, 2, 4},  {1, 1, 2, 0, 2},
    };
    return even_n ? even : odd;
}

}  // namespace plsrd::test
