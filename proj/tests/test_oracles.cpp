#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/oracles.hpp"
#include "test_support.hpp"

using namespace dynchrome;

namespace {

// Exhaustive maximum matching by include/exclude over the edge list; cross-check for
// the contraction-based search.
int brute_matching(const Graph& g) {
    auto edges = g.edges();
    int best = 0;
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    std::function<void(size_t, int)> go = [&](size_t i, int take) {
        best = std::max(best, take);
        if (i == edges.size()) return;
        if (take + static_cast<int>(edges.size() - i) <= best) return;
        auto [u, v] = edges[i];
        if (!used[static_cast<size_t>(u)] && !used[static_cast<size_t>(v)]) {
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = true;
            go(i + 1, take + 1);
            used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = false;
        }
        go(i + 1, take);
    };
    go(0, 0);
    return best;
}

bool dominates(const Graph& g, const VertexSet& set, int v) {
    if (std::binary_search(set.begin(), set.end(), v)) return true;
    for (int w : g.neighbors(v))
        if (std::binary_search(set.begin(), set.end(), w)) return true;
    return false;
}

}  // namespace

TEST_CASE("chromatic numbers of the usual suspects") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(complete(5)) == 5);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(Graph::from_edges(3, {})) == 1);   // edgeless
    CHECK(chromatic_number(Graph::from_edges(0, {})) == 0);
    Graph p = petersen();
    Coloring c = optimal_proper_coloring(p);
    CHECK(is_proper(c));
    CHECK(count_colors(c) == 3);
}

TEST_CASE("two-neighbor-colors chromatic numbers") {
    CHECK(dynamic_chromatic_number(cycle(5)) == 5);
    CHECK(dynamic_chromatic_number(cycle(4)) == 4);
    CHECK(dynamic_chromatic_number(cycle(6)) == 3);  // 1,2,3 repeated
    CHECK(dynamic_chromatic_number(cycle(7)) == 4);
    CHECK(dynamic_chromatic_number(complete(4)) == 4);
    CHECK(dynamic_chromatic_number(path(4)) == 3);
    CHECK(dynamic_chromatic_number(petersen()) == 4);
    Graph c7 = cycle(7);
    Coloring c = optimal_dynamic_coloring(c7);
    CHECK(is_proper(c));
    CHECK(is_dynamic(c));
    CHECK(count_colors(c) == 4);
}

TEST_CASE("the 2-subdivision of a triangle is the 6-cycle") {
    Graph g = two_subdivision(complete(3));
    CHECK(dynamic_chromatic_number(g) == 3);
    CHECK(dynamic_chromatic_number(two_subdivision(complete(4))) == 4);
}

TEST_CASE("independence numbers") {
    CHECK(independence_number(cycle(5)) == 2);
    CHECK(independence_number(cycle(6)) == 3);
    CHECK(independence_number(petersen()) == 4);
    CHECK(independence_number(complete(5)) == 1);
    VertexSet s = maximum_independent_set(petersen());
    CHECK(s.size() == 4);
    CHECK(is_independent(petersen(), s));
}

TEST_CASE("matching numbers, cross-checked against brute force") {
    CHECK(matching_number(cycle(5)) == 2);
    CHECK(matching_number(petersen()) == 5);
    CHECK(matching_number(complete(4)) == 2);
    CHECK(matching_number(path(4)) == 2);
    auto m = maximum_matching(petersen());
    CHECK(m.size() == 5);
    std::set<int> touched;
    for (auto [u, v] : m) {
        CHECK(u < v);
        CHECK(petersen().has_edge(u, v));
        CHECK(touched.insert(u).second);
        CHECK(touched.insert(v).second);
    }
    for (uint64_t s = 0; s < 20; ++s) {
        Graph g = testsup::erdos_renyi(9, 35, 1000 + s);
        CHECK(matching_number(g) == brute_matching(g));
    }
}

TEST_CASE("clique numbers") {
    CHECK(clique_number(petersen()) == 2);
    CHECK(clique_number(complete(5)) == 5);
    CHECK(clique_number(cycle(6)) == 2);
    CHECK(clique_number(cycle(3)) == 3);
    CHECK(clique_number(Graph::from_edges(4, {})) == 1);
    CHECK(clique_number(Graph::from_edges(0, {})) == 0);
}

TEST_CASE("budget refusal") {
    OracleBudget tiny_vertices;
    tiny_vertices.max_vertices = 4;
    CHECK_THROWS_AS(chromatic_number(cycle(5), tiny_vertices), ResourceError);

    OracleBudget tiny_nodes;
    tiny_nodes.max_nodes = 3;
    CHECK_THROWS_AS(dynamic_chromatic_number(petersen(), tiny_nodes), ResourceError);
}

TEST_CASE("greedy maximal independent set follows the order") {
    Graph c5 = cycle(5);
    VertexSet s = maximal_independent_set_in_order(c5, {0, 1, 2, 3, 4});
    CHECK(s == VertexSet{0, 2});
    CHECK_THROWS_AS(maximal_independent_set_in_order(c5, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(maximal_independent_set_in_order(c5, {0, 1, 2, 3, 3}), InputError);
}

TEST_CASE("seeded maximal independent sets are independent and dominating") {
    for (uint64_t s = 0; s < 10; ++s) {
        Graph g = testsup::erdos_renyi(14, 30, 2000 + s);
        VertexSet t = maximal_independent_dominating_set(g, s);
        CHECK(is_independent(g, t));
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(dominates(g, t, v));
        CHECK(maximal_independent_dominating_set(g, s) == t);  // deterministic
    }
}
