#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plsrd/graph.hpp"

namespace plsrd {

/// Vertex label: -1, 1 or 2.
using Label = std::int8_t;

/// Total assignment V -> {-1, 1, 2}, index-aligned with the graph vertices.
struct Labeling {
    std::vector<Label> labels;

    Labeling() = default;
    explicit Labeling(std::vector<Label> l) : labels(std::move(l)) {}

    static Labeling filled(int n, Label value) {
        return Labeling(std::vector<Label>(static_cast<size_t>(n), value));
    }
    static Labeling all_ones(int n) { return filled(n, 1); }

    int size() const { return static_cast<int>(labels.size()); }
    Label operator[](int v) const { return labels[static_cast<size_t>(v)]; }
    Label& operator[](int v) { return labels[static_cast<size_t>(v)]; }

    bool operator==(const Labeling&) const = default;
    /// Positional comparison with label order -1 < 1 < 2.
    bool lex_less(const Labeling& other) const;
};

enum class ViolationKind {
    C1_NoGuard,        // weak vertex with no strong neighbor
    C1_MultiGuard,     // weak vertex with two or more strong neighbors
    C2_SharedGuard,    // two weak vertices guarded by the same strong vertex
    C3_NonpositiveSum  // closed neighborhood sum below 1
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<int> vertices;  // the offending vertex, or the weak pair for C2
    int detail;                 // guard count (C1), guard vertex (C2), sum (C3)
    bool operator==(const Violation&) const = default;
};

/// Empty iff the labeling satisfies all three conditions:
/// C1 every weak vertex has exactly one strong neighbor, C2 no two weak
/// vertices share a strong neighbor, C3 every closed neighborhood sums to
/// at least 1.
struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct LabelingStats {
    int count_minus = 0;
    int count_one = 0;
    int count_two = 0;
    int weight = 0;  // count_one + 2*count_two - count_minus
};

/// Collects every violation, sorted by (kind, lowest vertex); C2 entries are
/// guard-centric, one per unordered weak pair sharing that guard, ordered by
/// (guard, pair). Throws LengthMismatch if f.size() != g.order().
ValidationReport validate(const Graph& g, const Labeling& f);

/// Short-circuiting check for solver inner loops; same acceptance set as
/// validate().ok().
bool is_valid(const Graph& g, const Labeling& f);

LabelingStats stats(const Labeling& f);

int closed_neighborhood_sum(const Graph& g, const Labeling& f, int v);

}  // namespace plsrd
