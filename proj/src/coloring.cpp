#include "dynchrome/coloring.hpp"

#include <algorithm>
#include <string>

namespace dynchrome {

Coloring::Coloring(const Graph& g, std::vector<int> colors)
    : graph_(&g), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != g.vertex_count())
        throw InputError("coloring has " + std::to_string(colors_.size()) +
                         " entries for a graph on " + std::to_string(g.vertex_count()) +
                         " vertices");
    for (int c : colors_)
        if (c < 1) throw InputError("color ids must be positive, got " + std::to_string(c));
}

const Graph& Coloring::graph() const {
    if (graph_ == nullptr) throw InputError("coloring is not bound to a graph");
    return *graph_;
}

int Coloring::color(int v) const {
    graph().degree(v);  // range check
    return colors_[static_cast<size_t>(v)];
}

Coloring Coloring::with_color(int v, int c) const {
    if (c < 1) throw InputError("color ids must be positive");
    graph().degree(v);
    Coloring out = *this;
    out.colors_[static_cast<size_t>(v)] = c;
    return out;
}

bool is_proper(const Coloring& c) {
    const Graph& g = c.graph();
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (v > u && c.color(u) == c.color(v)) return false;
    return true;
}

bool has_monochromatic_neighborhood(const Coloring& c, int v) {
    const Graph& g = c.graph();
    const auto& nb = g.neighbors(v);
    if (nb.size() < 2) return false;
    int first = c.color(nb[0]);
    for (size_t i = 1; i < nb.size(); ++i)
        if (c.color(nb[i]) != first) return false;
    return true;
}

bool is_dynamic(const Coloring& c) {
    if (!is_proper(c)) return false;
    const Graph& g = c.graph();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (has_monochromatic_neighborhood(c, v)) return false;
    return true;
}

int count_colors(const Coloring& c) {
    std::vector<int> ids = c.colors();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return static_cast<int>(ids.size());
}

int max_color(const Coloring& c) {
    int best = 0;
    for (int x : c.colors()) best = std::max(best, x);
    return best;
}

BadPartition bad_partition(const Coloring& c) {
    if (!is_proper(c)) throw InputError("bad partition is defined for proper colorings only");
    const Graph& g = c.graph();
    BadPartition out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (has_monochromatic_neighborhood(c, v))
            out.bad.insert(v);
        else
            out.good.insert(v);
    }
    for (int v : out.bad) {
        bool touches_bad = false;
        for (int w : g.neighbors(v))
            if (out.bad.contains(w)) {
                touches_bad = true;
                break;
            }
        if (touches_bad)
            out.nonisolated_bad.insert(v);
        else
            out.isolated_bad.insert(v);
    }
    InducedSubgraph sub = induced_subgraph(g, out.nonisolated_bad);
    out.nonisolated_bad_graph = std::move(sub.graph);
    out.nonisolated_bad_ids = std::move(sub.original_ids);
    return out;
}

Bipartition assert_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<size_t>(s)] != -1) continue;
        side[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    parent[static_cast<size_t>(w)] = v;
                    queue.push_back(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    // The edge joins two vertices at depths of equal parity, so the
                    // cycle through their deepest common ancestor is odd.
                    std::vector<int> va{v}, wa{w};
                    for (int x = v; parent[static_cast<size_t>(x)] != -1;) {
                        x = parent[static_cast<size_t>(x)];
                        va.push_back(x);
                    }
                    for (int x = w; parent[static_cast<size_t>(x)] != -1;) {
                        x = parent[static_cast<size_t>(x)];
                        wa.push_back(x);
                    }
                    VertexSet on_va(va);
                    int meet = -1;
                    size_t wi = 0;
                    for (; wi < wa.size(); ++wi)
                        if (on_va.contains(wa[wi])) {
                            meet = wa[wi];
                            break;
                        }
                    std::vector<int> cycle;
                    for (int x : va) {
                        cycle.push_back(x);
                        if (x == meet) break;
                    }
                    std::vector<int> tail(wa.begin(), wa.begin() + static_cast<long>(wi));
                    std::reverse(tail.begin(), tail.end());
                    cycle.insert(cycle.end(), tail.begin(), tail.end());
                    throw NotBipartiteError("graph contains an odd cycle", cycle);
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < n; ++v)
        (side[static_cast<size_t>(v)] == 0 ? out.part_a : out.part_b).insert(v);
    return out;
}

}  // namespace dynchrome
