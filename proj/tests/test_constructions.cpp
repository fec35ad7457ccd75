#include "doctest.h"

#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/oracles.hpp"

using namespace dynchrome;

TEST_CASE("2-subdivision structure") {
    Graph g = two_subdivision(complete(3));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(min_max_degree(g) == std::pair<int, int>{2, 2});
    CHECK(is_connected(g));
    CHECK_NOTHROW(assert_bipartite(g));
    // middle vertex of the first edge (0,1) is id 3
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 1));

    Graph h = two_subdivision(complete(5));
    CHECK(h.vertex_count() == 15);
    CHECK(h.edge_count() == 20);
    CHECK(dynamic_chromatic_number(h) >= 5);
}

TEST_CASE("layered gap family, small instance") {
    Graph g = gab_graph(3, 2);
    CHECK(g.vertex_count() == 7);
    auto [lo, hi] = min_max_degree(g);
    CHECK(lo == 2);
    CHECK(hi == 4);
    CHECK(chromatic_number(g) == 2);
    CHECK(dynamic_chromatic_number(g) == 4);
    CHECK_THROWS_AS(gab_graph(2, 3), InputError);  // needs a >= b
    CHECK_THROWS_AS(gab_graph(3, 1), InputError);
}

TEST_CASE("layered gap family degree pattern") {
    // a = 4, b = 2: c = 2, d = 0; columns 1..3 pairwise joined except nothing excluded
    // beyond the {3, 4} pair (absent), tails on columns 1..3.
    Graph g = gab_graph(4, 2);
    CHECK(g.vertex_count() == 9);
    auto [lo, hi] = min_max_degree(g);
    CHECK(lo == 2);   // tails
    CHECK(hi == 5);   // a + 1
    CHECK(chromatic_number(g) == 3);
}

TEST_CASE("near-clique gap family") {
    Graph g = prop2_graph(3, 3);
    CHECK(g.vertex_count() == 7);
    CHECK(chromatic_number(g) == 3);
    CHECK(independence_number(g) == 3);
    CHECK(dynamic_chromatic_number(g) - chromatic_number(g) == 2);
    CHECK_THROWS_AS(prop2_graph(3, 2), InputError);  // needs b >= 3
    CHECK_THROWS_AS(prop2_graph(2, 3), InputError);
}

TEST_CASE("subset incidence family") {
    Graph g = matching_lower_bound_graph(3);
    // 2-subsets of {1,2,3} vs the 3 elements: this is the 6-cycle
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(min_max_degree(g) == std::pair<int, int>{2, 2});
    CHECK(is_connected(g));
    CHECK_NOTHROW(assert_bipartite(g));

    Graph h = matching_lower_bound_graph(4);
    CHECK(h.vertex_count() == 4 + 6);
    CHECK(h.edge_count() == 12);
    CHECK(matching_number(h) == 4);
    CHECK_THROWS_AS(matching_lower_bound_graph(2), InputError);
}

TEST_CASE("hypergraph incidence graph") {
    Hypergraph h;
    h.vertex_count = 3;
    h.edges = {{0, 1, 2}};
    IncidenceGraph inc = incidence_graph(h);
    CHECK(inc.ground_size == 3);
    CHECK(inc.graph.vertex_count() == 4);
    CHECK(inc.graph.degree(3) == 3);
    for (int v = 0; v < 3; ++v) CHECK(inc.graph.degree(v) == 1);

    Hypergraph bad;
    bad.vertex_count = 2;
    bad.edges = {{0, 5}};
    CHECK_THROWS_AS(incidence_graph(bad), InputError);
}

TEST_CASE("hypergraph coloring from the incidence graph") {
    Hypergraph h;
    h.vertex_count = 2;
    h.edges = {{0, 1}};
    IncidenceGraph inc = incidence_graph(h);  // path 0 - 2 - 1
    Coloring good(inc.graph, {1, 2, 3});
    auto ground = induce_hypergraph_coloring(h, good);
    CHECK(ground == std::vector<int>{1, 2});

    Coloring not_dynamic(inc.graph, {1, 1, 2});  // edge vertex sees one color twice
    CHECK_THROWS_AS(induce_hypergraph_coloring(h, not_dynamic), InputError);
}

TEST_CASE("basic generators") {
    CHECK(cycle(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK(path(1).vertex_count() == 1);
    CHECK(path(5).edge_count() == 4);
    CHECK(complete(6).edge_count() == 15);
    Graph kb = complete_bipartite(2, 3);
    CHECK(kb.vertex_count() == 5);
    CHECK(kb.edge_count() == 6);
    CHECK(kb.degree(0) == 3);
    CHECK(kb.degree(2) == 2);
    Graph p = petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(min_max_degree(p) == std::pair<int, int>{3, 3});
    Graph q = cube_q3();
    CHECK(q.vertex_count() == 8);
    CHECK(q.edge_count() == 12);
    CHECK_NOTHROW(assert_bipartite(q));
}

TEST_CASE("pairing-model regular graphs") {
    for (uint64_t s = 0; s < 5; ++s) {
        Graph g = random_regular(10, 3, s);
        CHECK(g.vertex_count() == 10);
        auto [lo, hi] = min_max_degree(g);
        CHECK(lo == 3);
        CHECK(hi == 3);
        CHECK(random_regular(10, 3, s).edges() == g.edges());  // deterministic
    }
    CHECK_THROWS_AS(random_regular(5, 3, 0), InputError);   // odd n*r
    CHECK_THROWS_AS(random_regular(4, 5, 0), InputError);   // r >= n
    CHECK_THROWS_AS(random_regular(4, -1, 0), InputError);
    Graph edgeless = random_regular(4, 0, 7);
    CHECK(edgeless.edge_count() == 0);
}
