#include "plsrd/family.hpp"

#include <algorithm>
#include <array>

#include "plsrd/errors.hpp"

namespace plsrd {

namespace {

constexpr std::array<const char*, 11> kFamilyNames = {
    "path",   "cycle",  "complete", "bipartite",   "star", "wheel",
    "ladder", "prism",  "grid3",    "flowersnark", "tree",
};

int tree_order(const std::vector<Edge>& edges) {
    int top = -1;
    for (const auto& [u, v] : edges) top = std::max({top, u, v});
    return top + 1;
}

void check_is_tree(const std::vector<Edge>& edges) {
    if (edges.empty()) throw NotATree("tree needs at least one edge");
    const int n = tree_order(edges);
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || u == v) throw NotATree("bad tree edge");
    if (static_cast<int>(edges.size()) != n - 1)
        throw NotATree("edge count is not n-1");
    // Union-find; n-1 edges without a cycle imply connectivity.
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) throw NotATree("edge list contains a cycle");
        parent[ru] = rv;
    }
}

}  // namespace

FamilySpec FamilySpec::explicit_tree(std::vector<Edge> edges) {
    FamilySpec spec;
    spec.kind = Family::ExplicitTree;
    spec.n = tree_order(edges);
    spec.tree_edges = std::move(edges);
    return spec;
}

const char* family_name(Family kind) { return kFamilyNames[static_cast<int>(kind)]; }

std::optional<Family> family_from_name(std::string_view name) {
    for (size_t i = 0; i < kFamilyNames.size(); ++i)
        if (name == kFamilyNames[i]) return static_cast<Family>(i);
    return std::nullopt;
}

std::string describe(const FamilySpec& spec) {
    std::string out = family_name(spec.kind);
    if (spec.kind == Family::CompleteBipartite)
        out += "(p=" + std::to_string(spec.p) + ",n=" + std::to_string(spec.n) + ")";
    else
        out += "(n=" + std::to_string(spec.n) + ")";
    return out;
}

void check_params(const FamilySpec& spec) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw InvalidFamilyParams(describe(spec) + ": requires " + what);
    };
    switch (spec.kind) {
        case Family::Path:
        case Family::Cycle: need(spec.n >= 3, "n >= 3"); break;
        case Family::Complete: need(spec.n >= 2, "n >= 2"); break;
        case Family::CompleteBipartite:
            need(spec.p >= 2 && spec.p <= spec.n, "2 <= p <= n");
            break;
        case Family::Star: need(spec.n >= 1, "n >= 1"); break;
        case Family::Wheel: need(spec.n >= 4, "n >= 4"); break;
        case Family::Ladder: need(spec.n >= 2, "n >= 2"); break;
        case Family::Prism: need(spec.n >= 3, "n >= 3"); break;
        case Family::Grid3: need(spec.n >= 1, "n >= 1"); break;
        case Family::FlowerSnark: need(spec.n >= 2, "n >= 2"); break;
        case Family::ExplicitTree: check_is_tree(spec.tree_edges); break;
    }
}

int family_order(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::Path:
        case Family::Cycle:
        case Family::Complete: return spec.n;
        case Family::CompleteBipartite: return spec.p + spec.n;
        case Family::Star:
        case Family::Wheel: return spec.n + 1;
        case Family::Ladder:
        case Family::Prism: return 2 * spec.n;
        case Family::Grid3: return 3 * spec.n;
        case Family::FlowerSnark: return 4 * (2 * spec.n + 1);
        case Family::ExplicitTree: return tree_order(spec.tree_edges);
    }
    return 0;
}

Graph generate(const FamilySpec& spec) {
    check_params(spec);
    const int n = spec.n;
    std::vector<Edge> edges;
    switch (spec.kind) {
        case Family::Path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, std::move(edges));
        case Family::Cycle:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            return Graph(n, std::move(edges));
        case Family::Complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, std::move(edges));
        case Family::CompleteBipartite:
            for (int u = 0; u < spec.p; ++u)
                for (int v = 0; v < n; ++v) edges.emplace_back(u, spec.p + v);
            return Graph(spec.p + n, std::move(edges));
        case Family::Star:
            for (int v = 1; v <= n; ++v) edges.emplace_back(0, v);
            return Graph(n + 1, std::move(edges));
        case Family::Wheel:
            for (int v = 1; v <= n; ++v) edges.emplace_back(0, v);
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(1, n);
            return Graph(n + 1, std::move(edges));
        case Family::Ladder:
        case Family::Prism:
            for (int i = 0; i + 1 < n; ++i) {
                edges.emplace_back(i, i + 1);          // top rail
                edges.emplace_back(n + i, n + i + 1);  // bottom rail
            }
            for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);  // rungs
            if (spec.kind == Family::Prism) {
                edges.emplace_back(0, n - 1);
                edges.emplace_back(n, 2 * n - 1);
            }
            return Graph(2 * n, std::move(edges));
        case Family::Grid3:
            for (int j = 0; j < n; ++j) {
                edges.emplace_back(3 * j, 3 * j + 1);
                edges.emplace_back(3 * j + 1, 3 * j + 2);
                if (j + 1 < n)
                    for (int r = 0; r < 3; ++r)
                        edges.emplace_back(3 * j + r, 3 * (j + 1) + r);
            }
            return Graph(3 * n, std::move(edges));
        case Family::FlowerSnark: {
            const int m = 2 * n + 1;
            auto a = [&](int i) { return i; };
            auto b = [&](int i) { return m + i; };
            auto c = [&](int i) { return 2 * m + i; };
            auto d = [&](int i) { return 3 * m + i; };
            for (int i = 0; i + 1 < m; ++i) {
                edges.emplace_back(a(i), a(i + 1));
                edges.emplace_back(c(i), c(i + 1));
                edges.emplace_back(d(i), d(i + 1));
            }
            edges.emplace_back(a(0), a(m - 1));
            // The outer c/d layers close into one twisted cycle.
            edges.emplace_back(c(m - 1), d(0));
            edges.emplace_back(d(m - 1), c(0));
            for (int i = 0; i < m; ++i) {
                edges.emplace_back(a(i), b(i));
                edges.emplace_back(b(i), c(i));
                edges.emplace_back(b(i), d(i));
            }
            return Graph(4 * m, std::move(edges));
        }
        case Family::ExplicitTree:
            return Graph(tree_order(spec.tree_edges), spec.tree_edges);
    }
    throw InvalidFamilyParams("unknown family");
}

}  // namespace plsrd
