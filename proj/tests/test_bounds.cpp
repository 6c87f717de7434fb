#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "plsrd/bounds.hpp"
#include "plsrd/errors.hpp"
#include "plsrd/fixtures.hpp"
#include "plsrd/solver.hpp"

using namespace plsrd;
using test::lab;

namespace {

// Subset-enumeration oracle for the maximum 2-packing: largest size, ties by
// the lexicographically smallest sorted vertex sequence.
PackingSet brute_force_packing(const Graph& g) {
    const int n = g.order();
    PackingSet best;
    bool have = false;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        PackingSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.vertices.push_back(v);
        if (!is_two_packing(g, s)) continue;
        if (!have || s.size() > best.size() ||
            (s.size() == best.size() && s.vertices < best.vertices)) {
            best = s;
            have = true;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("closed forms") {
    CHECK(closed_form(FamilySpec::wheel(8)).exact == 5);
    CHECK(closed_form(FamilySpec::ladder(10)).exact == 12);
    BoundsRecord snark = closed_form(FamilySpec::flower_snark(5));
    CHECK_FALSE(snark.exact.has_value());
    CHECK(snark.lower == 27);
    CHECK(snark.upper == 29);
    CHECK(closed_form(FamilySpec::prism(6)).exact == 8);
    BoundsRecord tree = closed_form(FamilySpec::explicit_tree({{0, 1}, {1, 2}, {2, 3}}));
    CHECK_FALSE(tree.exact.has_value());
    CHECK_FALSE(tree.lower.has_value());
    CHECK(tree.upper == 2);
}

TEST_CASE("closed form records are internally consistent") {
    for (int n = 3; n <= 20; ++n) {
        for (FamilySpec spec : {FamilySpec::prism(n), FamilySpec::flower_snark(n)}) {
            BoundsRecord rec = closed_form(spec);
            REQUIRE(rec.lower.has_value());
            REQUIRE(rec.upper.has_value());
            CHECK(*rec.lower <= *rec.upper);
            if (rec.exact) CHECK(*rec.lower == *rec.upper);
        }
    }
}

TEST_CASE("cubic lower bound") {
    CHECK(cubic_lower_bound(generate(FamilySpec::prism(5))) == 6);
    CHECK(cubic_lower_bound(generate(FamilySpec::prism(3))) == 4);
    CHECK(cubic_lower_bound(generate(FamilySpec::flower_snark(2))) == 12);
    CHECK_THROWS_AS(cubic_lower_bound(generate(FamilySpec::wheel(5))), NotCubic);
    CHECK_THROWS_AS(cubic_lower_bound(generate(FamilySpec::cycle(6))), NotCubic);
}

TEST_CASE("cubic lower bound never exceeds the family value") {
    for (int n = 3; n <= 30; ++n) {
        BoundsRecord prism = closed_form(FamilySpec::prism(n));
        CHECK(cubic_lower_bound(generate(FamilySpec::prism(n))) <= *prism.exact);
        BoundsRecord snark = closed_form(FamilySpec::flower_snark(n));
        CHECK(cubic_lower_bound(generate(FamilySpec::flower_snark(n))) <= *snark.upper);
    }
}

TEST_CASE("exact maximum 2-packings") {
    CHECK(max_two_packing(generate(FamilySpec::path(4)), true).vertices ==
          std::vector<int>{0, 3});
    PackingSet c5 = max_two_packing(generate(FamilySpec::cycle(5)), true);
    CHECK(c5.size() == 1);
    CHECK(c5.vertices == std::vector<int>{0});
    CHECK(max_two_packing(generate(FamilySpec::cycle(6)), true).vertices ==
          std::vector<int>{0, 3});
}

TEST_CASE("exact packing equals the subset oracle") {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 9; ++n) corpus.push_back(generate(FamilySpec::cycle(n)));
    for (int n = 2; n <= 7; ++n) corpus.push_back(generate(FamilySpec::ladder(n)));
    corpus.push_back(generate(FamilySpec::grid3(4)));
    corpus.push_back(generate(FamilySpec::wheel(9)));
    corpus.push_back(generate(FamilySpec::complete_bipartite(3, 6)));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i)
        corpus.push_back(fixtures::random_tree(6 + i, rng));
    for (const Graph& g : corpus) {
        PackingSet expected = brute_force_packing(g);
        PackingSet got = max_two_packing(g, true);
        CHECK(got == expected);  // size and lexicographic tie-break
        CHECK(is_two_packing(g, got));
    }
}

TEST_CASE("exact packing guard") {
    CHECK_THROWS_AS(max_two_packing(generate(FamilySpec::cycle(25)), true),
                    TooLargeForExact);
}

TEST_CASE("greedy packing is maximal") {
    for (const Graph& g : {generate(FamilySpec::prism(10)), generate(FamilySpec::grid3(8)),
                           generate(FamilySpec::cycle(25))}) {
        PackingSet s = max_two_packing(g, false);
        CHECK(is_two_packing(g, s));
        for (int v = 0; v < g.order(); ++v) {
            if (std::find(s.vertices.begin(), s.vertices.end(), v) != s.vertices.end())
                continue;
            PackingSet extended = s;
            extended.vertices.push_back(v);
            std::sort(extended.vertices.begin(), extended.vertices.end());
            CHECK_FALSE(is_two_packing(g, extended));
        }
    }
}

TEST_CASE("packing upper bound with certificate") {
    Graph c6 = generate(FamilySpec::cycle(6));
    PackingBound bound = packing_upper_bound(c6, {{0, 3}});
    CHECK(bound.upper == 4);
    CHECK(stats(bound.certificate).weight == 4);
    CHECK(validate(c6, bound.certificate).ok());

    Graph prism3 = generate(FamilySpec::prism(3));
    CHECK(packing_upper_bound(prism3, {{0}}).upper == 5);

    Graph k4 = generate(FamilySpec::complete(4));
    PackingBound k4bound = packing_upper_bound(k4, {{0}});
    CHECK(k4bound.upper == 3);
    CHECK(k4bound.certificate == lab({-1, 2, 1, 1}));
}

TEST_CASE("packing bound dominates the optimum on min-degree-2 graphs") {
    std::vector<FamilySpec> specs;
    for (int n = 3; n <= 6; ++n) specs.push_back(FamilySpec::prism(n));
    for (int n = 4; n <= 10; ++n) specs.push_back(FamilySpec::cycle(n));
    for (int n = 4; n <= 9; ++n) specs.push_back(FamilySpec::wheel(n));
    specs.push_back(FamilySpec::complete_bipartite(2, 5));
    specs.push_back(FamilySpec::grid3(4));
    for (const FamilySpec& spec : specs) {
        Graph g = generate(spec);
        PackingBound bound = packing_upper_bound(g, max_two_packing(g, true));
        CHECK(validate(g, bound.certificate).ok());
        CHECK(stats(bound.certificate).weight == bound.upper);
        CHECK(brute_force(g).optimum <= bound.upper);
    }
}

TEST_CASE("packing upper bound guards") {
    CHECK_THROWS_AS(packing_upper_bound(generate(FamilySpec::path(4)), {{0, 3}}),
                    MinDegreeTooLow);
    CHECK_THROWS_AS(packing_upper_bound(generate(FamilySpec::cycle(6)), {{0, 1}}),
                    NotAPacking);
}

TEST_CASE("tree construction rules") {
    // Both ends of P4 are leaves: rule (i) twice.
    ConstructionResult p4 = tree_construction(generate(FamilySpec::path(4)), {{0, 3}});
    CHECK(p4.labeling == lab({-1, 2, 2, -1}));
    CHECK(p4.claimed_weight == 2);

    // The star hub is a support vertex: rule (ii) sends the strong label to
    // the hub and the weak one to its lowest leaf.
    ConstructionResult s3 = tree_construction(generate(FamilySpec::star(3)), {{0}});
    CHECK(s3.labeling == lab({2, -1, 1, 1}));
    CHECK(s3.claimed_weight == 3);

    // Vertex 3 of P7 is neither leaf nor support: rule (iii).
    ConstructionResult p7 = tree_construction(generate(FamilySpec::path(7)), {{0, 3, 6}});
    CHECK(p7.labeling == lab({-1, 2, 2, -1, 1, 2, -1}));
    CHECK(p7.claimed_weight == 4);

    // Two vertices, either singleton packs.
    ConstructionResult k2 = tree_construction(Graph(2, {{0, 1}}), {{0}});
    CHECK(k2.labeling == lab({-1, 2}));
    CHECK(k2.claimed_weight == 1);
}

TEST_CASE("tree construction guards") {
    CHECK_THROWS_AS(tree_construction(generate(FamilySpec::cycle(4)), {{0}}), NotATree);
    CHECK_THROWS_AS(tree_construction(generate(FamilySpec::path(4)), {{0, 2}}), NotAPacking);
}

TEST_CASE("tree construction on random trees") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        std::uniform_int_distribution<int> size(5, 16);
        Graph t = fixtures::random_tree(size(rng), rng);
        PackingSet s = max_two_packing(t, true);
        ConstructionResult r = tree_construction(t, s);
        CHECK(validate(t, r.labeling).ok());
        CHECK(r.claimed_weight == t.order() - s.size());
        if (t.order() <= 12)
            CHECK(brute_force(t).optimum <= r.claimed_weight);
    }
}
