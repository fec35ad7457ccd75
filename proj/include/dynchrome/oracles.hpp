#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dynchrome/coloring.hpp"
#include "dynchrome/graph.hpp"

namespace dynchrome {

// Caps for the exhaustive searches. The node budget is the deterministic stop; the
// timeout is a generous emergency brake that should never fire first at desk scale.
struct OracleBudget {
    int max_vertices = 32;
    long long max_nodes = 50'000'000;
    double timeout_seconds = 600.0;
};

// All searches are exact and deterministic (ascending-id tie-breaks). They refuse with
// ResourceError — never an approximation — when the budget runs out.

int chromatic_number(const Graph& g, const OracleBudget& budget = {});
Coloring optimal_proper_coloring(const Graph& g, const OracleBudget& budget = {});

int dynamic_chromatic_number(const Graph& g, const OracleBudget& budget = {});
Coloring optimal_dynamic_coloring(const Graph& g, const OracleBudget& budget = {});

int independence_number(const Graph& g, const OracleBudget& budget = {});
VertexSet maximum_independent_set(const Graph& g, const OracleBudget& budget = {});

int matching_number(const Graph& g, const OracleBudget& budget = {});
// Pairs (u, v) with u < v, sorted; exact on general graphs (blossom contraction).
std::vector<std::pair<int, int>> maximum_matching(const Graph& g, const OracleBudget& budget = {});

int clique_number(const Graph& g, const OracleBudget& budget = {});

// Greedy maximal independent set scanned in the given vertex order (a permutation).
// Maximality makes the result dominating as well.
VertexSet maximal_independent_set_in_order(const Graph& g, const std::vector<int>& order);

// Same, with the order drawn from the seed.
VertexSet maximal_independent_dominating_set(const Graph& g, uint64_t seed);

}  // namespace dynchrome
