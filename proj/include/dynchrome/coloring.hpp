#pragma once

#include <vector>

#include "dynchrome/graph.hpp"

namespace dynchrome {

// Total assignment of positive color ids (need not be contiguous) to a graph's vertices.
// Holds a pointer to the graph it colors; the graph must outlive the coloring.
class Coloring {
public:
    Coloring() = default;
    Coloring(const Graph& g, std::vector<int> colors);

    const Graph& graph() const;
    int color(int v) const;
    const std::vector<int>& colors() const { return colors_; }

    Coloring with_color(int v, int c) const;  // copy with one vertex recolored

    bool operator==(const Coloring& other) const { return colors_ == other.colors_; }

private:
    const Graph* graph_ = nullptr;
    std::vector<int> colors_;
};

bool is_proper(const Coloring& c);

// Proper, and every vertex of degree >= 2 sees at least two distinct neighbor colors.
bool is_dynamic(const Coloring& c);

// True when v has degree >= 2 and all its neighbors carry one color.
bool has_monochromatic_neighborhood(const Coloring& c, int v);

int count_colors(const Coloring& c);
int max_color(const Coloring& c);

// Split of the vertices of a proper coloring by the two-neighbor-colors condition.
struct BadPartition {
    VertexSet bad;             // degree >= 2, neighborhood monochromatic
    VertexSet good;            // everything else
    VertexSet isolated_bad;    // bad vertices with no bad neighbor
    VertexSet nonisolated_bad;
    Graph nonisolated_bad_graph;            // induced on nonisolated_bad
    std::vector<int> nonisolated_bad_ids;   // subgraph id -> original id
};
BadPartition bad_partition(const Coloring& c);

struct Bipartition {
    VertexSet part_a, part_b;
};

// Two-sides split by BFS; throws NotBipartiteError with an odd-cycle witness otherwise.
Bipartition assert_bipartite(const Graph& g);

}  // namespace dynchrome
