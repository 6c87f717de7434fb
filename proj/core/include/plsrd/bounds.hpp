#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plsrd/construct.hpp"
#include "plsrd/family.hpp"
#include "plsrd/graph.hpp"
#include "plsrd/labeling.hpp"

namespace plsrd {

/// Known bounds for one instance. When exact is present, lower = upper =
/// exact. provenance maps "lower"/"upper"/"exact" to the rule that produced
/// the entry.
struct BoundsRecord {
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> exact;
    std::map<std::string, std::string> provenance;
};

/// Closed-form value for the family, exact for all families except
/// FlowerSnark (lower/upper pair) and ExplicitTree (upper only, from an
/// exact maximum 2-packing).
BoundsRecord closed_form(const FamilySpec& spec);

/// ceil(3n/5) for a 3-regular graph on n vertices. Throws NotCubic.
int cubic_lower_bound(const Graph& g);

/// Vertex set with pairwise distance >= 3.
struct PackingSet {
    std::vector<int> vertices;  // sorted ascending
    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const PackingSet&) const = default;
};

bool is_two_packing(const Graph& g, const PackingSet& s);

/// exact = true runs a branch-and-bound subset search (n <= 24, ties broken
/// by the lexicographically smallest vertex set); exact = false runs a
/// greedy sweep by ascending (degree, index) and returns a maximal, not
/// necessarily maximum, packing.
PackingSet max_two_packing(const Graph& g, bool exact);

struct PackingBound {
    int upper = 0;
    Labeling certificate;
};

/// n - |S| upper bound for graphs with min degree >= 2, together with the
/// witnessing labeling (S weak, one chosen neighbor per element strong, the
/// rest 1). The certificate is re-validated, not trusted.
PackingBound packing_upper_bound(const Graph& g, const PackingSet& s);

/// Labels a tree from a 2-packing S: a leaf of S turns weak and its support
/// strong; a support vertex of S turns strong with its lowest leaf weak; any
/// other vertex of S turns weak with its lowest neighbor strong. Remaining
/// vertices get 1. Result validates with weight n - |S|.
ConstructionResult tree_construction(const Graph& tree, const PackingSet& s);

}  // namespace plsrd
