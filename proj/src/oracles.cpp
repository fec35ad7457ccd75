#include "dynchrome/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

#include "dynchrome/rng.hpp"

namespace dynchrome {

namespace {

struct SearchCtx {
    long long nodes = 0;
    long long cap = 0;
    std::chrono::steady_clock::time_point deadline;
    const char* what = "";
    long long lb = -1, ub = -1;  // best-known bounds, kept fresh by the driver

    SearchCtx(const OracleBudget& b, const char* name) : cap(b.max_nodes), what(name) {
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(b.timeout_seconds));
    }

    void tick() {
        ++nodes;
        if (nodes > cap)
            throw ResourceError(std::string(what) + ": node budget exhausted", lb, ub);
        if ((nodes & 8191) == 0 && std::chrono::steady_clock::now() > deadline)
            throw ResourceError(std::string(what) + ": timeout", lb, ub);
    }
};

void check_size(const Graph& g, const OracleBudget& b, const char* what) {
    if (g.vertex_count() > b.max_vertices)
        throw ResourceError(std::string(what) + ": graph has " +
                            std::to_string(g.vertex_count()) +
                            " vertices, budget allows " + std::to_string(b.max_vertices));
    if (g.vertex_count() > 64)
        throw ResourceError(std::string(what) + ": implementation handles at most 64 vertices");
}

// Vertices sorted by descending degree, ascending id inside a degree class.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

int greedy_clique_size(const Graph& g) {
    std::vector<int> order = degree_order(g);
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

int greedy_coloring_size(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), 0);
    int used = 0;
    for (int v : degree_order(g)) {
        int c = 1;
        while (true) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[static_cast<size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            if (!clash) break;
            ++c;
        }
        color[static_cast<size_t>(v)] = c;
        used = std::max(used, c);
    }
    return used;
}

// Backtracking k-colorability, proper or proper+two-neighbor-colors. Static vertex
// order, color classes canonicalized by the "first use in increasing order" rule.
struct ColorSearch {
    const Graph& g;
    SearchCtx& ctx;
    int k;
    bool dynamic_mode;
    std::vector<int> order;
    std::vector<int> color;         // vertex -> 0 (unset) or color id
    std::vector<int> uncolored_nb;  // vertex -> count of uncolored neighbors

    ColorSearch(const Graph& graph, SearchCtx& c, int colors, bool dyn)
        : g(graph), ctx(c), k(colors), dynamic_mode(dyn) {
        order = degree_order(g);
        color.assign(static_cast<size_t>(g.vertex_count()), 0);
        uncolored_nb.resize(static_cast<size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            uncolored_nb[static_cast<size_t>(v)] = g.degree(v);
    }

    bool sees_two_colors(int w) const {
        const auto& nb = g.neighbors(w);
        int first = color[static_cast<size_t>(nb[0])];
        for (size_t i = 1; i < nb.size(); ++i)
            if (color[static_cast<size_t>(nb[i])] != first) return true;
        return false;
    }

    bool place(size_t pos, int used_max) {
        if (pos == order.size()) return true;
        int v = order[pos];
        // v gets a color in every branch below, so its neighbors' counters drop now
        std::vector<int> completed;
        for (int w : g.neighbors(v))
            if (--uncolored_nb[static_cast<size_t>(w)] == 0 && g.degree(w) >= 2)
                completed.push_back(w);
        int limit = std::min(k, used_max + 1);
        for (int c = 1; c <= limit; ++c) {
            ctx.tick();
            bool ok = true;
            for (int w : g.neighbors(v))
                if (color[static_cast<size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (dynamic_mode) {
                for (int w : completed)
                    if (!sees_two_colors(w)) {
                        ok = false;
                        break;
                    }
            }
            if (ok && place(pos + 1, std::max(used_max, c))) return true;
            color[static_cast<size_t>(v)] = 0;
        }
        for (int w : g.neighbors(v)) ++uncolored_nb[static_cast<size_t>(w)];
        return false;
    }

    bool feasible() { return place(0, 0); }
};

int color_search_driver(const Graph& g, const OracleBudget& budget, bool dynamic_mode,
                        Coloring* witness) {
    const char* what = dynamic_mode ? "dynamic chromatic oracle" : "chromatic oracle";
    check_size(g, budget, what);
    int n = g.vertex_count();
    if (n == 0) {
        if (witness) *witness = Coloring(g, {});
        return 0;
    }
    SearchCtx ctx(budget, what);
    int lb = std::max(1, greedy_clique_size(g));
    int ub = dynamic_mode ? n : greedy_coloring_size(g);
    for (int k = lb; k <= ub; ++k) {
        ctx.lb = k;
        ctx.ub = ub;
        ColorSearch search(g, ctx, k, dynamic_mode);
        if (search.feasible()) {
            if (witness) *witness = Coloring(g, search.color);
            return k;
        }
    }
    // unreachable: k = n is proper-feasible, and the all-distinct coloring always
    // satisfies the two-neighbor-colors condition
    throw ConsistencyError(std::string(what) + ": search window exhausted");
}

struct MisSearch {
    int n;
    std::vector<uint64_t> nb;
    SearchCtx& ctx;
    int best = -1;
    uint64_t best_set = 0;

    MisSearch(const Graph& g, SearchCtx& c) : n(g.vertex_count()), ctx(c) {
        nb.assign(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) nb[static_cast<size_t>(v)] |= 1ULL << w;
    }

    void run(uint64_t avail, uint64_t cur_set, int cur) {
        ctx.tick();
        if (cur + std::popcount(avail) <= best) return;
        if (avail == 0) {
            best = cur;
            best_set = cur_set;
            return;
        }
        // pivot on the densest remaining vertex; lowest id wins ties
        int pivot = -1, pivot_deg = -1;
        for (uint64_t rest = avail; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(nb[static_cast<size_t>(v)] & avail);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        if (pivot_deg == 0) {  // leftovers are pairwise non-adjacent: take them all
            int total = cur + std::popcount(avail);
            if (total > best) {
                best = total;
                best_set = cur_set | avail;
            }
            return;
        }
        uint64_t pbit = 1ULL << pivot;
        run(avail & ~(nb[static_cast<size_t>(pivot)] | pbit), cur_set | pbit, cur + 1);
        run(avail & ~pbit, cur_set, cur);
    }
};

VertexSet mis_driver(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "independent set oracle");
    int n = g.vertex_count();
    if (n == 0) return {};
    SearchCtx ctx(budget, "independent set oracle");
    MisSearch search(g, ctx);
    uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    search.run(all, 0, 0);
    std::vector<int> out;
    for (uint64_t rest = search.best_set; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return VertexSet(std::move(out));
}

// Maximum matching in a general graph by augmenting paths with blossom contraction.
struct BlossomMatcher {
    int n;
    const Graph& g;
    std::vector<int> match, p, base, q;
    std::vector<char> used, blossom;

    explicit BlossomMatcher(const Graph& graph) : n(graph.vertex_count()), g(graph) {
        match.assign(static_cast<size_t>(n), -1);
        p.assign(static_cast<size_t>(n), -1);
        base.resize(static_cast<size_t>(n));
        used.resize(static_cast<size_t>(n));
        blossom.resize(static_cast<size_t>(n));
    }

    int lca(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        while (true) {
            a = base[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = 1;
            if (match[static_cast<size_t>(a)] == -1) break;
            a = p[static_cast<size_t>(match[static_cast<size_t>(a)])];
        }
        while (true) {
            b = base[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = p[static_cast<size_t>(match[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[static_cast<size_t>(v)] != b) {
            blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
            blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = 1;
            p[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = p[static_cast<size_t>(child)];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
        used[static_cast<size_t>(root)] = 1;
        q.clear();
        q.push_back(root);
        for (size_t qi = 0; qi < q.size(); ++qi) {
            int v = q[qi];
            for (int to : g.neighbors(v)) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<size_t>(to)] != -1 &&
                     p[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                            base[static_cast<size_t>(i)] = curbase;
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = 1;
                                q.push_back(i);
                            }
                        }
                } else if (p[static_cast<size_t>(to)] == -1) {
                    p[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1) return to;
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = 1;
                    q.push_back(match[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int solve() {
        int size = 0;
        for (int v = 0; v < n; ++v)
            if (match[static_cast<size_t>(v)] == -1) {
                int u = find_path(v);
                if (u == -1) continue;
                ++size;
                while (u != -1) {
                    int pv = p[static_cast<size_t>(u)];
                    int next = match[static_cast<size_t>(pv)];
                    match[static_cast<size_t>(u)] = pv;
                    match[static_cast<size_t>(pv)] = u;
                    u = next;
                }
            }
        return size;
    }
};

}  // namespace

int chromatic_number(const Graph& g, const OracleBudget& budget) {
    return color_search_driver(g, budget, false, nullptr);
}

Coloring optimal_proper_coloring(const Graph& g, const OracleBudget& budget) {
    Coloring witness;
    color_search_driver(g, budget, false, &witness);
    return witness;
}

int dynamic_chromatic_number(const Graph& g, const OracleBudget& budget) {
    return color_search_driver(g, budget, true, nullptr);
}

Coloring optimal_dynamic_coloring(const Graph& g, const OracleBudget& budget) {
    Coloring witness;
    color_search_driver(g, budget, true, &witness);
    return witness;
}

int independence_number(const Graph& g, const OracleBudget& budget) {
    return mis_driver(g, budget).size();
}

VertexSet maximum_independent_set(const Graph& g, const OracleBudget& budget) {
    return mis_driver(g, budget);
}

std::vector<std::pair<int, int>> maximum_matching(const Graph& g, const OracleBudget& budget) {
    check_size(g, budget, "matching oracle");
    BlossomMatcher matcher(g);
    matcher.solve();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = matcher.match[static_cast<size_t>(v)];
        if (w > v) out.emplace_back(v, w);
    }
    return out;
}

int matching_number(const Graph& g, const OracleBudget& budget) {
    return static_cast<int>(maximum_matching(g, budget).size());
}

int clique_number(const Graph& g, const OracleBudget& budget) {
    return independence_number(complement(g), budget);
}

VertexSet maximal_independent_set_in_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InputError("order must list every vertex exactly once");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw InputError("order must be a permutation of the vertices");
        seen[static_cast<size_t>(v)] = 1;
    }
    VertexSet taken;
    for (int v : order) {
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (taken.contains(w)) {
                blocked = true;
                break;
            }
        if (!blocked) taken.insert(v);
    }
    return taken;
}

VertexSet maximal_independent_dominating_set(const Graph& g, uint64_t seed) {
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(order);
    return maximal_independent_set_in_order(g, order);
}

}  // namespace dynchrome
