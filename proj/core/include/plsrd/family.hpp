#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plsrd/graph.hpp"

namespace plsrd {

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Wheel,
    Ladder,
    Prism,
    Grid3,
    FlowerSnark,
    ExplicitTree,
};

/// Descriptor of a parametrized graph family instance.
///
/// Parameter ranges: Path/Cycle n >= 3, Complete n >= 2,
/// CompleteBipartite 2 <= p <= n, Star n >= 1 (n+1 vertices),
/// Wheel n >= 4 (n+1 vertices), Ladder n >= 2 (2n vertices),
/// Prism n >= 3 (2n vertices), Grid3 n >= 1 (3n vertices),
/// FlowerSnark n >= 2 (the graph J_{2n+1} on 8n+4 vertices).
/// ExplicitTree carries its edge list; n is inferred from it.
struct FamilySpec {
    Family kind = Family::Path;
    int n = 0;
    int p = 0;  // CompleteBipartite only
    std::vector<Edge> tree_edges;

    static FamilySpec path(int n) { return {Family::Path, n, 0, {}}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, n, 0, {}}; }
    static FamilySpec complete(int n) { return {Family::Complete, n, 0, {}}; }
    static FamilySpec complete_bipartite(int p, int n) {
        return {Family::CompleteBipartite, n, p, {}};
    }
    static FamilySpec star(int n) { return {Family::Star, n, 0, {}}; }
    static FamilySpec wheel(int n) { return {Family::Wheel, n, 0, {}}; }
    static FamilySpec ladder(int n) { return {Family::Ladder, n, 0, {}}; }
    static FamilySpec prism(int n) { return {Family::Prism, n, 0, {}}; }
    static FamilySpec grid3(int n) { return {Family::Grid3, n, 0, {}}; }
    static FamilySpec flower_snark(int n) { return {Family::FlowerSnark, n, 0, {}}; }
    static FamilySpec explicit_tree(std::vector<Edge> edges);

    bool operator==(const FamilySpec&) const = default;
};

const char* family_name(Family kind);
std::optional<Family> family_from_name(std::string_view name);

/// Short human-readable tag, e.g. "prism(n=5)".
std::string describe(const FamilySpec& spec);

/// Throws InvalidFamilyParams or NotATree when the spec is out of range.
void check_params(const FamilySpec& spec);

/// Number of vertices of the generated graph.
int family_order(const FamilySpec& spec);

/// Builds the instance under the canonical vertex ordering:
/// paths/cycles 0..n-1 in order; bipartite part X = 0..p-1, Y = p..p+n-1;
/// star/wheel hub = 0, cycle = 1..n; ladder/prism top row a_1..a_n = 0..n-1,
/// bottom row b_1..b_n = n..2n-1 (prism adds the wrap edges); grid3
/// column-major with column j at vertices 3j, 3j+1, 3j+2 top to bottom;
/// flower snark blocks a, b, c, d of size 2n+1 in that order.
Graph generate(const FamilySpec& spec);

}  // namespace plsrd
