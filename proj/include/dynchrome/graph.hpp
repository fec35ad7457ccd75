#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dynchrome/errors.hpp"

namespace dynchrome {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    const std::vector<int>& ids() const { return ids_; }
    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    VertexSet unite(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet subtract(const VertexSet& other) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;  // kept sorted and unique
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Duplicate edges collapse silently; self-loops are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;  // sorted ascending
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // (u, v) with u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const;
};

// (min degree, max degree); rejects the empty graph.
std::pair<int, int> min_max_degree(const Graph& g);

// Union of neighborhoods of s, not including s's own members unless adjacent to s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;  // subgraph id -> id in the parent graph
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace dynchrome
