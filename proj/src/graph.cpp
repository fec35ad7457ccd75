#include "dynchrome/graph.hpp"

#include <algorithm>
#include <string>

namespace dynchrome {

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    std::vector<int> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::subtract(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(a) + ", " +
                             std::to_string(b) + ") with n = " + std::to_string(n));
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        g.adj_[static_cast<size_t>(a)].push_back(b);
        g.adj_[static_cast<size_t>(b)].push_back(a);
    }
    int m = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        m += static_cast<int>(list.size());
    }
    g.m_ = m / 2;
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range (n = " +
                         std::to_string(n_) + ")");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[static_cast<size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::pair<int, int> min_max_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw InputError("degree range of the empty graph is undefined");
    int lo = g.degree(0), hi = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return {lo, hi};
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) {
        const auto& nb = g.neighbors(v);
        out.insert(out.end(), nb.begin(), nb.end());
    }
    return VertexSet(std::move(out));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> ids = s.ids();
    std::vector<int> back(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.vertex_count())
            throw InputError("induced subgraph vertex out of range");
        back[static_cast<size_t>(ids[i])] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < ids.size(); ++i)
        for (int w : g.neighbors(ids[i])) {
            int j = back[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    return {Graph::from_edges(static_cast<int>(ids.size()), edges), std::move(ids)};
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return connected_components(g).size() == 1;
}

}  // namespace dynchrome
