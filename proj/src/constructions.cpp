#include "dynchrome/constructions.hpp"

#include <algorithm>
#include <string>

#include "dynchrome/rng.hpp"

namespace dynchrome {

Graph two_subdivision(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> base_edges = g.edges();  // sorted
    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (const auto& [u, v] : base_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    return Graph::from_edges(n + static_cast<int>(base_edges.size()), edges);
}

Graph gab_graph(int a, int b) {
    if (b < 2 || a < b) throw InputError("gab family needs a >= b >= 2");
    int c = a / b, d = a % b;
    // column vertex (i, j): rows i = 1..b for columns j = 1..c+1, rows i = 1..d for
    // column c+2; tail vertex per column 1..c+1. Ids: row-major columns, then tails.
    std::vector<std::pair<int, int>> cells;  // (i, j)
    for (int i = 1; i <= b; ++i)
        for (int j = 1; j <= c + 1; ++j) cells.emplace_back(i, j);
    for (int i = 1; i <= d; ++i) cells.emplace_back(i, c + 2);
    std::sort(cells.begin(), cells.end());
    int nc = static_cast<int>(cells.size());
    int n = nc + (c + 1);
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < nc; ++x)
        for (int y = x + 1; y < nc; ++y) {
            int j1 = cells[static_cast<size_t>(x)].second;
            int j2 = cells[static_cast<size_t>(y)].second;
            if (j1 == j2) continue;
            if (std::min(j1, j2) == c + 1 && std::max(j1, j2) == c + 2) continue;
            edges.emplace_back(x, y);
        }
    for (int x = 0; x < nc; ++x) {
        int j = cells[static_cast<size_t>(x)].second;
        if (j <= c + 1) edges.emplace_back(x, nc + (j - 1));
    }
    return Graph::from_edges(n, edges);
}

Graph prop2_graph(int a, int b) {
    if (b < 3 || a < b) throw InputError("prop2 family needs a >= b >= 3");
    int core = a + b - 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> split;  // matching edges replaced by 2-paths
    for (int i = 0; i < b - 1; ++i) split.emplace_back(2 * i, 2 * i + 1);
    auto is_split = [&split](int u, int v) {
        return std::find(split.begin(), split.end(), std::make_pair(u, v)) != split.end();
    };
    for (int u = 0; u < core; ++u)
        for (int v = u + 1; v < core; ++v)
            if (!is_split(u, v)) edges.emplace_back(u, v);
    int next = core;
    for (const auto& [u, v] : split) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    return Graph::from_edges(next, edges);
}

Graph matching_lower_bound_graph(int a) {
    if (a < 3) throw InputError("matching example needs a >= 3");
    std::vector<std::pair<int, int>> edges;
    int next = a;
    for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) {
            edges.emplace_back(next, i - 1);
            edges.emplace_back(next, j - 1);
            ++next;
        }
    return Graph::from_edges(next, edges);
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    if (h.vertex_count < 0) throw InputError("hypergraph vertex count must be non-negative");
    std::vector<std::pair<int, int>> edges;
    int next = h.vertex_count;
    for (const auto& e : h.edges) {
        for (int v : e) {
            if (v < 0 || v >= h.vertex_count)
                throw InputError("hyperedge member out of range");
            edges.emplace_back(next, v);
        }
        ++next;
    }
    IncidenceGraph out;
    out.graph = Graph::from_edges(next, edges);
    out.ground_size = h.vertex_count;
    return out;
}

std::vector<int> induce_hypergraph_coloring(const Hypergraph& h, const Coloring& c) {
    IncidenceGraph inc = incidence_graph(h);
    if (c.graph().vertex_count() != inc.graph.vertex_count())
        throw InputError("coloring does not match the incidence graph of this hypergraph");
    Coloring bound(inc.graph, c.colors());
    if (!is_dynamic(bound))
        throw InputError("coloring of the incidence graph must satisfy the "
                         "two-neighbor-colors condition");
    std::vector<int> out(c.colors().begin(),
                         c.colors().begin() + inc.ground_size);
    return out;
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("complete bipartite graph needs positive parts");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

Graph cube_q3() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit) {
            int w = v ^ (1 << bit);
            if (w > v) edges.emplace_back(v, w);
        }
    return Graph::from_edges(8, edges);
}

Graph random_regular(int n, int r, uint64_t seed) {
    if (n < 1 || r < 0) throw InputError("regular generator needs n >= 1 and r >= 0");
    if (r >= n) throw InputError("regular degree must be below the vertex count");
    if ((static_cast<long long>(n) * r) % 2 != 0)
        throw InputError("n * r must be even for an r-regular graph");
    Rng rng(seed);
    for (int attempt = 0; attempt < 200000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(r));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < r; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        bool simple = true;
        std::vector<std::vector<char>> seen(static_cast<size_t>(n),
                                            std::vector<char>(static_cast<size_t>(n), 0));
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                simple = false;
                break;
            }
            seen[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            seen[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
            edges.emplace_back(u, v);
        }
        if (simple) return Graph::from_edges(n, edges);
    }
    throw ResourceError("pairing model failed to produce a simple graph in 200000 attempts");
}

}  // namespace dynchrome
