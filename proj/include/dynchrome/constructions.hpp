#pragma once

#include <cstdint>
#include <vector>

#include "dynchrome/coloring.hpp"
#include "dynchrome/graph.hpp"

namespace dynchrome {

// Every edge replaced by a length-2 path through a fresh vertex. Original vertices keep
// their ids; middle vertices are appended in sorted-edge order.
Graph two_subdivision(const Graph& g);

// Layered family witnessing a chromatic gap of ceil((a+1)/b): writes a = b*c + d and
// builds b rows of c+1 column vertices, d extras in column c+2, and one tail vertex per
// column 1..c+1. Columns are pairwise fully joined except the {c+1, c+2} pair; tails
// attach to their own column. Requires a >= b >= 2.
Graph gab_graph(int a, int b);

// Complete graph on a+b-1 vertices with a (b-1)-edge matching on the lowest ids replaced
// by length-2 paths through fresh vertices. Requires a >= b >= 3.
Graph prop2_graph(int a, int b);

// Bipartite: the 2-subsets of {1..a} on one side, the a elements on the other, subset
// adjacent to its two members. Elements get ids 0..a-1; subsets follow in lexicographic
// order. Requires a >= 3.
Graph matching_lower_bound_graph(int a);

struct Hypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;  // each sorted, members in 0..vertex_count-1
};

struct IncidenceGraph {
    Graph graph;
    int ground_size = 0;  // ids 0..ground_size-1 are ground vertices, the rest are edges
};

// Bipartite incidence graph: ground vertices on one side, one vertex per hyperedge on
// the other, joined by membership.
IncidenceGraph incidence_graph(const Hypergraph& h);

// Restriction of a two-neighbor-colors coloring of the incidence graph to the ground
// set; proper for the hypergraph (every edge with >= 2 members sees >= 2 colors).
std::vector<int> induce_hypergraph_coloring(const Hypergraph& h, const Coloring& c);

Graph cycle(int n);              // n >= 3
Graph path(int n);               // n >= 1
Graph complete(int n);           // n >= 1
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph cube_q3();

// Pairing-model r-regular graph; resamples until simple, up to 200000 attempts.
Graph random_regular(int n, int r, uint64_t seed);

}  // namespace dynchrome
