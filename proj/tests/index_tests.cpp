#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "sombor/sombor.hpp"
#include "test_support.hpp"

using namespace sombor;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double rt2 = std::numbers::sqrt2;
} // namespace

TEST_CASE("edge sum with custom weights") {
    const Graph p3 = generate({Family::path, 3, 0});
    const EdgeWeightFunction first_zagreb{[](int a, int b) { return double(a + b); }, true};
    CHECK(edge_sum_index(p3, first_zagreb) == 6.0);

    const EdgeWeightFunction albertson{[](int a, int b) { return std::abs(double(a - b)); }, false};
    CHECK(edge_sum_index(test_support::complete_graph(3), albertson) == 0.0);

    // unasserted symmetry gets spot-checked on the degree pairs present
    const EdgeWeightFunction broken{[](int a, int b) { return double(a - b); }, false};
    CHECK_THROWS_MATCHES(edge_sum_index(p3, broken), error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("asymmetric-weight")));

    const EdgeWeightFunction exploding{
        [](int a, int b) { return a == b ? std::numeric_limits<double>::infinity() : 1.0; }, true};
    CHECK_THROWS_AS(edge_sum_index(generate({Family::path, 4, 0}), exploding), error);

    CHECK_THROWS_AS(edge_sum_index(make_graph(3, {{0, 1}}), first_zagreb), error);  // isolated
}

TEST_CASE("built-in index values") {
    // frozen by direct evaluation of the definitions
    CHECK_THAT(compute(generate({Family::path, 4, 0}), IndexId::so),
               WithinRel(2.0 * std::sqrt(5.0) + std::sqrt(8.0), 1e-15));
    CHECK_THAT(compute(generate({Family::path, 7, 0}), IndexId::so1), WithinRel(3.0, 1e-15));
    CHECK(compute(generate({Family::cycle, 9, 0}), IndexId::so1) == 0.0);
    CHECK_THAT(compute(generate({Family::star, 4, 0}), IndexId::so1), WithinRel(30.0, 1e-15));
    CHECK_THAT(compute(generate({Family::friendship, 2, 0}), IndexId::so1),
               WithinRel(24.0, 1e-15));
    CHECK_THAT(compute(generate({Family::cycle, 5, 0}), IndexId::so4),
               WithinRel(10.0 * pi, 1e-14));
    CHECK_THAT(compute(generate({Family::path, 10, 0}), IndexId::so2),
               WithinRel(6.0 / 5.0, 1e-14));
    CHECK_THAT(compute(generate({Family::tri_chain, 3, 0}), IndexId::so1),
               WithinRel(36.0, 1e-14));
}

TEST_CASE("index from profile") {
    for (int n = 3; n <= 12; ++n) {
        DegreePairProfile path{{{1, 2}, 2}};
        if (n > 3) path[{2, 2}] = n - 3;
        CHECK_THAT(index_from_profile(path, IndexId::so1), WithinRel(3.0, 1e-15));
    }
    CHECK(index_from_profile({{{2, 2}, 9}}, IndexId::so5) == 0.0);
    for (int n = 2; n <= 6; ++n) {
        const double expected = 288.0 * n * pi / std::pow(rt2 + 2.0 * std::sqrt(20.0), 2);
        CHECK_THAT(index_from_profile({{{2, 4}, 2 * n}}, IndexId::so6), WithinRel(expected, 1e-14));
    }
    CHECK_THROWS_AS(index_from_profile({}, IndexId::so1), error);
}

TEST_CASE("all indices in one pass") {
    const auto p4 = all_indices(generate({Family::path, 4, 0}));
    CHECK_THAT(p4.at(IndexId::so1), WithinRel(3.0, 1e-15));

    const auto c6 = all_indices(generate({Family::cycle, 6, 0}));
    CHECK(c6.at(IndexId::so1) == 0.0);
    CHECK(c6.at(IndexId::so2) == 0.0);
    CHECK(c6.at(IndexId::so5) == 0.0);
    CHECK(c6.at(IndexId::so6) == 0.0);

    CHECK_THAT(all_indices(generate({Family::ladder, 3, 0})).at(IndexId::so1),
               WithinRel(10.0, 1e-15));

    const Graph g = generate({Family::grid, 4, 5});
    for (IndexId id : all_index_ids)
        CHECK_THAT(all_indices(g).at(id), WithinRel(compute(g, id), 1e-15));
}

TEST_CASE("profile path and edge path agree") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = test_support::random_connected_graph(rng, 40);
        const DegreePairProfile profile = test_support::brute_profile(g);
        for (IndexId id : all_index_ids) {
            const double direct = compute(g, id);
            const double via_profile = index_from_profile(profile, id);
            if (direct == 0.0)
                CHECK(via_profile == 0.0);
            else
                CHECK_THAT(via_profile, WithinRel(direct, 1e-12));
        }
    }
}

TEST_CASE("relabeling invariance") {
    Rng rng(55);
    const Graph g = generate({Family::ladder, 6, 0});
    for (int trial = 0; trial < 25; ++trial) {
        const Graph h = relabel(g, test_support::random_permutation(g.vertex_count(), rng));
        for (IndexId id : all_index_ids)
            CHECK_THAT(compute(h, id), WithinAbs(compute(g, id), 1e-12 * (1 + std::abs(compute(g, id)))));
    }
}

TEST_CASE("regular graphs zero the gap-based indices") {
    const std::vector<Graph> regulars = {
        generate({Family::cycle, 3, 0}),  generate({Family::cycle, 8, 0}),
        test_support::complete_graph(4),  test_support::complete_graph(5),
        generate({Family::complete_bipartite, 3, 3}),
        generate({Family::complete_bipartite, 4, 4}),
    };
    for (const Graph& g : regulars) {
        REQUIRE(is_regular(g));
        CHECK(compute(g, IndexId::so1) == 0.0);
        CHECK(compute(g, IndexId::so2) == 0.0);
        CHECK(compute(g, IndexId::so5) == 0.0);
        CHECK(compute(g, IndexId::so6) == 0.0);

        // algebraically forced closed forms on r-regular graphs
        const int r = g.degree(0);
        const int m = g.edge_count();
        CHECK_THAT(compute(g, IndexId::so), WithinRel(m * r * rt2, 1e-12));
        CHECK_THAT(compute(g, IndexId::so3), WithinRel(rt2 * pi * m * r, 1e-12));
        CHECK_THAT(compute(g, IndexId::so4), WithinRel(pi / 2.0 * m * r * r, 1e-12));
    }
}

TEST_CASE("additivity over disjoint union and the so2 edge bound") {
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph a = test_support::random_connected_graph(rng, 15);
        const Graph b = test_support::random_connected_graph(rng, 15);
        const Graph both = disjoint_union(a, b);
        for (IndexId id : all_index_ids) {
            const double sum = compute(a, id) + compute(b, id);
            if (sum == 0.0)
                CHECK(compute(both, id) == 0.0);
            else
                CHECK_THAT(compute(both, id), WithinRel(sum, 1e-13));
        }
        CHECK(compute(both, IndexId::so2) < both.edge_count());
    }
}

TEST_CASE("isolated vertices are rejected") {
    const Graph with_isolated = make_graph(4, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(compute(with_isolated, IndexId::so1), error);
    CHECK_THROWS_AS(all_indices(with_isolated), error);
}
