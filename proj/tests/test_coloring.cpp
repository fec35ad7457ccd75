#include "doctest.h"

#include <set>

#include "dynchrome/coloring.hpp"
#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"

using namespace dynchrome;

TEST_CASE("coloring validation") {
    Graph c4 = cycle(4);
    CHECK_THROWS_AS(Coloring(c4, {1, 2, 1}), InputError);
    CHECK_THROWS_AS(Coloring(c4, {1, 2, 1, 0}), InputError);
    CHECK_THROWS_AS(Coloring(c4, {1, 2, 1, -3}), InputError);
    Coloring c(c4, {1, 2, 1, 2});
    CHECK(c.color(3) == 2);
    Coloring d = c.with_color(3, 7);
    CHECK(d.color(3) == 7);
    CHECK(c.color(3) == 2);
}

TEST_CASE("proper and two-neighbor-colors checks") {
    Graph c4 = cycle(4);
    Coloring alt(c4, {1, 2, 1, 2});
    CHECK(is_proper(alt));
    CHECK_FALSE(is_dynamic(alt));
    CHECK(has_monochromatic_neighborhood(alt, 0));

    Coloring rainbow(c4, {1, 2, 3, 4});
    CHECK(is_proper(rainbow));
    CHECK(is_dynamic(rainbow));

    Coloring improper(c4, {1, 1, 2, 3});
    CHECK_FALSE(is_proper(improper));

    Coloring mixed(c4, {1, 2, 1, 3});
    CHECK(is_proper(mixed));
    CHECK_FALSE(is_dynamic(mixed));             // vertex 1 sees only color 1
    CHECK(has_monochromatic_neighborhood(mixed, 1));
    CHECK_FALSE(has_monochromatic_neighborhood(mixed, 0));
}

TEST_CASE("degree below two never counts as monochromatic") {
    Graph p2 = path(2);
    Coloring c(p2, {1, 2});
    CHECK(is_dynamic(c));
    CHECK_FALSE(has_monochromatic_neighborhood(c, 0));

    Graph p3 = path(3);
    Coloring mono(p3, {1, 2, 1});
    CHECK_FALSE(is_dynamic(mono));  // middle vertex sees 1,1
    CHECK(has_monochromatic_neighborhood(mono, 1));
    CHECK_FALSE(has_monochromatic_neighborhood(mono, 0));
}

TEST_CASE("color counting with sparse ids") {
    Graph p4 = path(4);
    Coloring c(p4, {1, 7, 1, 9});
    CHECK(count_colors(c) == 3);
    CHECK(max_color(c) == 9);
}

TEST_CASE("offender split on an alternating 4-cycle") {
    Graph c4 = cycle(4);
    BadPartition bp = bad_partition(Coloring(c4, {1, 2, 1, 2}));
    CHECK(bp.bad == VertexSet{0, 1, 2, 3});
    CHECK(bp.good.empty());
    CHECK(bp.isolated_bad.empty());
    CHECK(bp.nonisolated_bad == VertexSet{0, 1, 2, 3});
    CHECK(bp.nonisolated_bad_graph.edge_count() == 4);  // induced C4
    CHECK(bp.nonisolated_bad_ids == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("offender split on a 5-cycle") {
    Graph c5 = cycle(5);
    BadPartition bp = bad_partition(Coloring(c5, {1, 2, 1, 2, 3}));
    CHECK(bp.bad == VertexSet{1, 2});
    CHECK(bp.good == VertexSet{0, 3, 4});
    CHECK(bp.isolated_bad.empty());
    CHECK(bp.nonisolated_bad == VertexSet{1, 2});
    CHECK(bp.nonisolated_bad_graph.edge_count() == 1);
}

TEST_CASE("offender split isolates a bad star center") {
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    BadPartition bp = bad_partition(Coloring(star, {1, 2, 2, 2}));
    CHECK(bp.bad == VertexSet{0});  // leaves have degree 1
    CHECK(bp.isolated_bad == VertexSet{0});
    CHECK(bp.nonisolated_bad.empty());
    CHECK(bp.nonisolated_bad_graph.vertex_count() == 0);
}

TEST_CASE("bipartite split and odd-cycle witness") {
    Bipartition bi = assert_bipartite(cycle(4));
    CHECK(bi.part_a.size() + bi.part_b.size() == 4);
    CHECK(is_independent(cycle(4), bi.part_a));
    CHECK(is_independent(cycle(4), bi.part_b));

    Graph c5 = cycle(5);
    try {
        assert_bipartite(c5);
        FAIL("expected NotBipartiteError");
    } catch (const NotBipartiteError& e) {
        const auto& cyc = e.odd_cycle;
        REQUIRE(cyc.size() >= 3);
        CHECK(cyc.size() % 2 == 1);
        std::set<int> distinct(cyc.begin(), cyc.end());
        CHECK(distinct.size() == cyc.size());
        for (size_t i = 0; i < cyc.size(); ++i)
            CHECK(c5.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
}

TEST_CASE("bipartite split handles disconnected graphs") {
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Bipartition bi = assert_bipartite(two);
    CHECK(bi.part_a.size() + bi.part_b.size() == 4);
    CHECK(is_independent(two, bi.part_a));
    CHECK(is_independent(two, bi.part_b));
}
