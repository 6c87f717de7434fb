#pragma once

#include <span>
#include <utility>
#include <vector>

namespace plsrd {

using Edge = std::pair<int, int>;

/// Simple undirected graph, immutable after construction.
///
/// Construction normalizes every edge to u < v, sorts the edge list
/// lexicographically and rejects loops, duplicate edges and out-of-range
/// endpoints. Neighbor lists are sorted strictly ascending. Instances are
/// safe to share across threads.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const int> neighbors(int v) const {
        return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(int u, int v) const;

    /// Edges normalized to u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    int min_degree() const;
    bool is_regular(int k) const;

    /// True iff a path of length <= d joins u and v (bounded BFS).
    bool within_distance(int u, int v, int d) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<int> flat_;
};

}  // namespace plsrd
