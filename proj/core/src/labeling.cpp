#include "plsrd/labeling.hpp"

#include <algorithm>

#include "plsrd/errors.hpp"

namespace plsrd {

bool Labeling::lex_less(const Labeling& other) const {
    // -1 < 1 < 2 coincides with numeric order on the stored bytes.
    return std::lexicographical_compare(labels.begin(), labels.end(),
                                        other.labels.begin(), other.labels.end());
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::C1_NoGuard: return "C1_NoGuard";
        case ViolationKind::C1_MultiGuard: return "C1_MultiGuard";
        case ViolationKind::C2_SharedGuard: return "C2_SharedGuard";
        case ViolationKind::C3_NonpositiveSum: return "C3_NonpositiveSum";
    }
    return "?";
}

ValidationReport validate(const Graph& g, const Labeling& f) {
    if (f.size() != g.order())
        throw LengthMismatch("labeling has " + std::to_string(f.size()) +
                             " entries for a graph of order " + std::to_string(g.order()));
    const int n = g.order();
    std::vector<Violation> c1, c2, c3;
    for (int v = 0; v < n; ++v) {
        int sum = f[v];
        int guards = 0;
        for (int u : g.neighbors(v)) {
            sum += f[u];
            if (f[u] == 2) ++guards;
        }
        if (f[v] == -1 && guards == 0)
            c1.push_back({ViolationKind::C1_NoGuard, {v}, 0});
        if (f[v] == -1 && guards >= 2)
            c1.push_back({ViolationKind::C1_MultiGuard, {v}, guards});
        if (f[v] == 2) {
            std::vector<int> weak;
            for (int u : g.neighbors(v))
                if (f[u] == -1) weak.push_back(u);
            for (size_t i = 0; i < weak.size(); ++i)
                for (size_t j = i + 1; j < weak.size(); ++j)
                    c2.push_back({ViolationKind::C2_SharedGuard, {weak[i], weak[j]}, v});
        }
        if (sum < 1)
            c3.push_back({ViolationKind::C3_NonpositiveSum, {v}, sum});
    }
    // c1 and c3 are already ordered by vertex; order c2 by (guard, pair).
    std::sort(c2.begin(), c2.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.detail, a.vertices) < std::tie(b.detail, b.vertices);
    });
    ValidationReport report;
    auto by_kind_then_vertex = [](std::vector<Violation>& part, std::vector<Violation>& out) {
        std::stable_sort(part.begin(), part.end(), [](const Violation& a, const Violation& b) {
            if (a.kind != b.kind) return a.kind < b.kind;
            return a.vertices.front() < b.vertices.front();
        });
        out.insert(out.end(), part.begin(), part.end());
    };
    by_kind_then_vertex(c1, report.violations);
    by_kind_then_vertex(c2, report.violations);
    by_kind_then_vertex(c3, report.violations);
    return report;
}

bool is_valid(const Graph& g, const Labeling& f) {
    if (f.size() != g.order())
        throw LengthMismatch("labeling length does not match graph order");
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        int sum = f[v];
        int guards = 0;
        int weak = 0;
        for (int u : g.neighbors(v)) {
            sum += f[u];
            if (f[u] == 2) ++guards;
            if (f[u] == -1) ++weak;
        }
        if (sum < 1) return false;
        if (f[v] == -1 && guards != 1) return false;
        if (f[v] == 2 && weak > 1) return false;
    }
    return true;
}

LabelingStats stats(const Labeling& f) {
    LabelingStats s;
    for (Label l : f.labels) {
        if (l == -1)
            ++s.count_minus;
        else if (l == 1)
            ++s.count_one;
        else
            ++s.count_two;
    }
    s.weight = s.count_one + 2 * s.count_two - s.count_minus;
    return s;
}

int closed_neighborhood_sum(const Graph& g, const Labeling& f, int v) {
    int sum = f[v];
    for (int u : g.neighbors(v)) sum += f[u];
    return sum;
}

}  // namespace plsrd
