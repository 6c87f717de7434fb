#include "plsrd/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "plsrd/errors.hpp"

namespace plsrd {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Vertices within distance 2 of v, v included, as a bitmask (n <= 24).
std::vector<std::uint32_t> conflict_masks(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> mask(n);
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 1u << v;
        for (int u : g.neighbors(v)) {
            m |= 1u << u;
            for (int w : g.neighbors(u)) m |= 1u << w;
        }
        mask[v] = m;
    }
    return mask;
}

struct PackingSearch {
    const std::vector<std::uint32_t>& conflict;
    int n;
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> current;

    // Include-first DFS in ascending vertex order: the first set reaching
    // the final maximum size is the lexicographically smallest one.
    void run(int v, std::uint32_t forbidden) {
        const std::uint32_t full = (1u << n) - 1;  // n <= 24
        int avail = std::popcount(full & ~forbidden & (~0u << v));
        if (static_cast<int>(current.size()) + avail <= best) return;
        if (v == n) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            return;
        }
        if (!(forbidden & (1u << v))) {
            current.push_back(v);
            run(v + 1, forbidden | conflict[v]);
            current.pop_back();
        }
        run(v + 1, forbidden);
    }
};

}  // namespace

BoundsRecord closed_form(const FamilySpec& spec) {
    check_params(spec);
    const int n = spec.n;
    BoundsRecord rec;
    auto exact = [&](int value, const char* rule) {
        rec.exact = rec.lower = rec.upper = value;
        rec.provenance["exact"] = rule;
    };
    switch (spec.kind) {
        case Family::Complete: exact(n - 1, "complete-graph-formula"); break;
        case Family::CompleteBipartite:
            exact(spec.p + n - 2, "complete-bipartite-formula");
            break;
        case Family::Star: exact(n, "star-formula"); break;
        case Family::Wheel:
            exact((n % 4 == 0) ? n / 2 + 1 : (n + 2) / 2 + 1, "wheel-formula");
            break;
        case Family::Path: exact(2 * n / 3, "path-formula"); break;
        case Family::Cycle: exact(ceil_div(2 * n, 3), "cycle-formula"); break;
        case Family::Ladder: exact(ceil_div(6 * n, 5), "ladder-formula"); break;
        case Family::Prism:
            exact(ceil_div(6 * n, 5) + ((n % 10 == 4 || n % 10 == 5) ? 1 : 0),
                  "prism-formula");
            break;
        case Family::Grid3: exact(2 * n, "grid3-formula"); break;
        case Family::FlowerSnark:
            rec.lower = ceil_div(3 * (8 * n + 4), 5);
            rec.upper = (n % 2 == 0) ? 5 * n + 3 : 5 * n + 4;
            rec.provenance["lower"] = "cubic-lower-bound";
            rec.provenance["upper"] = "flower-snark-construction";
            break;
        case Family::ExplicitTree: {
            const Graph t = generate(spec);
            PackingSet s = max_two_packing(t, /*exact=*/true);
            rec.upper = t.order() - s.size();
            rec.provenance["upper"] = "two-packing-construction";
            break;
        }
    }
    return rec;
}

int cubic_lower_bound(const Graph& g) {
    if (!g.is_regular(3)) throw NotCubic("graph is not 3-regular");
    return ceil_div(3 * g.order(), 5);
}

bool is_two_packing(const Graph& g, const PackingSet& s) {
    for (int v : s.vertices)
        if (v < 0 || v >= g.order()) return false;
    for (size_t i = 0; i < s.vertices.size(); ++i)
        for (size_t j = i + 1; j < s.vertices.size(); ++j)
            if (s.vertices[i] == s.vertices[j] ||
                g.within_distance(s.vertices[i], s.vertices[j], 2))
                return false;
    return true;
}

PackingSet max_two_packing(const Graph& g, bool exact) {
    const int n = g.order();
    if (exact) {
        if (n > 24)
            throw TooLargeForExact("exact 2-packing search is limited to 24 vertices");
        auto conflict = conflict_masks(g);
        PackingSearch search{conflict, n, -1, {}, {}};
        search.run(0, 0);
        return {std::move(search.best_set)};
    }
    // Greedy by ascending (degree, index); maximal but not always maximum.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
    std::vector<char> blocked(n, 0);
    std::vector<int> chosen;
    for (int v : order) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        blocked[v] = 1;
        for (int u : g.neighbors(v)) {
            blocked[u] = 1;
            for (int w : g.neighbors(u)) blocked[w] = 1;
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return {std::move(chosen)};
}

PackingBound packing_upper_bound(const Graph& g, const PackingSet& s) {
    if (g.min_degree() < 2)
        throw MinDegreeTooLow("packing upper bound needs min degree >= 2");
    if (!is_two_packing(g, s)) throw NotAPacking("vertex set is not a 2-packing");
    Labeling f = Labeling::all_ones(g.order());
    for (int v : s.vertices) {
        f[v] = -1;
        f[g.neighbors(v).front()] = 2;  // lowest-indexed neighbor as guard
    }
    ValidationReport report = validate(g, f);
    if (!report.ok())
        throw CertificateInvalid("2-packing certificate failed validation");
    return {g.order() - s.size(), std::move(f)};
}

ConstructionResult tree_construction(const Graph& tree, const PackingSet& s) {
    const int n = tree.order();
    if (n < 2) throw NotATree("tree construction needs at least two vertices");
    {
        // A connected graph with n-1 edges is a tree.
        if (tree.edge_count() != n - 1) throw NotATree("graph is not a tree");
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : tree.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached != n) throw NotATree("graph is not connected");
    }
    if (!is_two_packing(tree, s)) throw NotAPacking("vertex set is not a 2-packing");

    auto is_leaf = [&](int v) { return tree.degree(v) == 1; };
    auto lowest_leaf_neighbor = [&](int v) -> int {
        for (int u : tree.neighbors(v))
            if (is_leaf(u)) return u;
        return -1;
    };

    Labeling f = Labeling::all_ones(n);
    for (int v : s.vertices) {
        if (is_leaf(v)) {
            f[v] = -1;
            f[tree.neighbors(v).front()] = 2;  // its support vertex
        } else if (int leaf = lowest_leaf_neighbor(v); leaf != -1) {
            f[v] = 2;
            f[leaf] = -1;
        } else {
            f[v] = -1;
            f[tree.neighbors(v).front()] = 2;
        }
    }
    ValidationReport report = validate(tree, f);
    if (!report.ok())
        throw CertificateInvalid("tree 2-packing certificate failed validation");

    FamilySpec spec = FamilySpec::explicit_tree(tree.edges());
    return {std::move(f), n - s.size(), std::move(spec)};
}

}  // namespace plsrd
