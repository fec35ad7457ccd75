#include "dynchrome/repair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dynchrome/formulas.hpp"
#include "dynchrome/rng.hpp"

namespace dynchrome {

namespace {

int list_intersection_size(const std::vector<int>& sorted, const VertexSet& set) {
    int count = 0;
    for (int v : sorted)
        if (set.contains(v)) ++count;
    return count;
}

std::vector<int> sorted_distinct_colors(const Coloring& c) {
    std::vector<int> ids = c.colors();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

DominationResult independent_dominator_for(const Graph& g, const VertexSet& targets) {
    if (targets.empty()) throw InputError("target set must be nonempty");
    if (g.edge_count() == 0) throw InputError("graph must have at least one edge");
    if (!is_independent(g, targets)) throw InputError("target set must be independent");
    for (int v : targets)
        if (g.degree(v) == 0)
            throw InputError("target vertex " + std::to_string(v) + " has degree 0");

    VertexSet boundary = neighborhood(g, targets);  // disjoint from targets (independence)
    int n = g.vertex_count();
    std::vector<long long> f(static_cast<size_t>(n), 0);
    std::vector<char> active(static_cast<size_t>(n), 0);
    for (int b : boundary) {
        f[static_cast<size_t>(b)] = list_intersection_size(g.neighbors(b), targets);
        active[static_cast<size_t>(b)] = 1;
    }

    DominationResult out;
    VertexSet remaining = targets;
    while (true) {
        int best = -1;
        long long best_f = 0;
        for (int b : boundary)
            if (active[static_cast<size_t>(b)] && f[static_cast<size_t>(b)] > best_f) {
                best = b;
                best_f = f[static_cast<size_t>(b)];
            }
        if (best == -1) break;

        out.selected.insert(best);
        out.trace.emplace_back(best, static_cast<int>(best_f));
        out.covered += best_f;

        // the pick and every boundary vertex next to it are out of the running
        active[static_cast<size_t>(best)] = 0;
        f[static_cast<size_t>(best)] = 0;
        for (int w : g.neighbors(best))
            if (active[static_cast<size_t>(w)]) {
                active[static_cast<size_t>(w)] = 0;
                f[static_cast<size_t>(w)] = 0;
            }

        // survivors lose exactly the coverage they shared with the pick
        VertexSet newly_covered;
        for (int w : g.neighbors(best))
            if (remaining.contains(w)) newly_covered.insert(w);
        for (int b : boundary)
            if (active[static_cast<size_t>(b)])
                f[static_cast<size_t>(b)] -= list_intersection_size(g.neighbors(b), newly_covered);
        remaining = remaining.subtract(newly_covered);
    }

    out.residual = remaining;
    out.dominating_set = out.selected.unite(out.residual);
    if (out.covered != static_cast<long long>(targets.size()) - out.residual.size())
        throw ConsistencyError("domination loop lost count of its coverage");
    if (!is_independent(g, out.dominating_set))
        throw ConsistencyError("domination loop produced a non-independent set");
    return out;
}

int default_max_rounds(int n) {
    return static_cast<int>(10.0 * n * std::log(n + 2.0)) + 1;
}

namespace {

int resolved_rounds(const ResampleConfig& cfg, int n) {
    int rounds = cfg.max_rounds.value_or(default_max_rounds(n));
    if (rounds < 1) throw InputError("max_rounds must be at least 1");
    return rounds;
}

void require_fresh_palette(const Coloring& base, const VertexSet& inside,
                           const std::vector<int>& palette, const char* what) {
    std::vector<int> sorted = palette;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError(std::string(what) + ": palette colors must be distinct");
    for (int c : sorted)
        if (c < 1) throw InputError(std::string(what) + ": palette colors must be positive");
    const Graph& g = base.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (inside.contains(v)) continue;
        if (std::binary_search(sorted.begin(), sorted.end(), base.color(v)))
            throw InputError(std::string(what) +
                             ": palette color already used outside the recolored set");
    }
}

}  // namespace

RecolorResult recolor_independent_set(const Graph& g, const VertexSet& t,
                                      const std::vector<int>& palette, const Coloring& base,
                                      const ResampleConfig& cfg) {
    if (!is_independent(g, t)) throw InputError("recolored set must be independent");
    if (g.vertex_count() == 0) throw InputError("graph must be nonempty");
    if (min_max_degree(g).first < 2)
        throw InputError("resampling recolor requires min degree >= 2");
    if (static_cast<int>(palette.size()) < resample_palette_size(g))
        throw InputError("palette smaller than the required " +
                         std::to_string(resample_palette_size(g)) + " colors");
    require_fresh_palette(base, t, palette, "resampling recolor");

    // vertices whose whole neighborhood lies in t (min degree 2 keeps this meaningful)
    std::vector<int> constrained;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool inside = true;
        for (int w : g.neighbors(v))
            if (!t.contains(w)) {
                inside = false;
                break;
            }
        if (inside) constrained.push_back(v);
    }

    Rng rng(cfg.seed);
    std::vector<int> colors = base.colors();
    const int pal = static_cast<int>(palette.size());
    for (int v : t)
        colors[static_cast<size_t>(v)] =
            palette[static_cast<size_t>(rng.below(static_cast<uint64_t>(pal)))];

    auto violated = [&](int u) {
        const auto& nb = g.neighbors(u);
        int first = colors[static_cast<size_t>(nb[0])];
        for (size_t i = 1; i < nb.size(); ++i)
            if (colors[static_cast<size_t>(nb[i])] != first) return false;
        return true;
    };
    auto first_violated = [&]() {
        for (int u : constrained)
            if (violated(u)) return u;
        return -1;
    };

    RecolorResult out;
    int max_rounds = resolved_rounds(cfg, g.vertex_count());
    while (true) {
        int u = first_violated();
        if (u == -1) {
            out.coloring = Coloring(g, std::move(colors));
            return out;
        }
        if (out.rounds >= max_rounds) break;
        for (int w : g.neighbors(u))
            colors[static_cast<size_t>(w)] =
                palette[static_cast<size_t>(rng.below(static_cast<uint64_t>(pal)))];
        ++out.rounds;
    }

    if (cfg.fallback == Fallback::Fail)
        throw ResourceError("resampling rounds exhausted", out.rounds, -1);

    // deterministic repair: one so-far-unused palette color per still-violated vertex
    out.fallback_used = true;
    std::vector<int> on_t;
    for (int v : t) on_t.push_back(colors[static_cast<size_t>(v)]);
    std::sort(on_t.begin(), on_t.end());
    std::vector<int> avail;
    for (int c : palette)
        if (!std::binary_search(on_t.begin(), on_t.end(), c)) avail.push_back(c);
    size_t next_avail = 0;
    for (int u : constrained) {
        if (!violated(u)) continue;
        if (next_avail == avail.size())
            throw ResourceError("palette exhausted during deterministic repair");
        int w = g.neighbors(u)[0];
        colors[static_cast<size_t>(w)] = avail[next_avail++];
    }
    for (int u : constrained)
        if (violated(u))
            throw ConsistencyError("deterministic repair left a one-color neighborhood");
    out.coloring = Coloring(g, std::move(colors));
    return out;
}

RecolorResult two_color_part_b(const Graph& g, const VertexSet& part_a,
                               const VertexSet& part_b, std::pair<int, int> color_pair,
                               const Coloring& base, const ResampleConfig& cfg) {
    if (color_pair.first == color_pair.second)
        throw InputError("the two part colors must differ");
    if (!is_independent(g, part_b)) throw InputError("part_b must be independent");
    require_fresh_palette(base, part_b, {color_pair.first, color_pair.second},
                          "part two-coloring");
    for (int v : part_a) {
        for (int w : g.neighbors(v))
            if (!part_b.contains(w))
                throw InputError("part_a vertex " + std::to_string(v) +
                                 " has a neighbor outside part_b");
        if (g.degree(v) < 2)
            throw InfeasibleError("part_a vertex " + std::to_string(v) +
                                  " cannot see two colors with degree " +
                                  std::to_string(g.degree(v)));
    }

    std::vector<int> colors = base.colors();
    const std::vector<int>& bs = part_b.ids();
    const std::vector<int>& as = part_a.ids();
    // which part_a constraints watch a given part_b vertex
    std::vector<std::vector<int>> watchers(bs.size());
    std::vector<int> b_index(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < bs.size(); ++i) b_index[static_cast<size_t>(bs[i])] = static_cast<int>(i);
    for (int v : as)
        for (int w : g.neighbors(v))
            watchers[static_cast<size_t>(b_index[static_cast<size_t>(w)])].push_back(v);

    auto mono = [&](int v) {
        const auto& nb = g.neighbors(v);
        int first = colors[static_cast<size_t>(nb[0])];
        for (size_t i = 1; i < nb.size(); ++i)
            if (colors[static_cast<size_t>(nb[i])] != first) return false;
        return true;
    };
    auto mono_if = [&](int v, int flipped, int new_color) {
        // would v's neighborhood collapse to one color if `flipped` took new_color?
        for (int y : g.neighbors(v)) {
            int cy = (y == flipped) ? new_color : colors[static_cast<size_t>(y)];
            if (cy != new_color) return false;
        }
        return true;
    };

    Rng rng(cfg.seed);
    for (int b : bs)
        colors[static_cast<size_t>(b)] = rng.below(2) ? color_pair.second : color_pair.first;

    RecolorResult out;
    int max_rounds = resolved_rounds(cfg, g.vertex_count());
    bool solved = false;
    while (true) {
        int v = -1;
        for (int a : as)
            if (mono(a)) {
                v = a;
                break;
            }
        if (v == -1) {
            solved = true;
            break;
        }
        if (out.rounds >= max_rounds) break;
        // flip the neighbor that breaks the fewest satisfied constraints
        int best_w = -1, best_damage = std::numeric_limits<int>::max();
        for (int w : g.neighbors(v)) {
            int wc = colors[static_cast<size_t>(w)];
            int flipped_color = (wc == color_pair.first) ? color_pair.second : color_pair.first;
            int damage = 0;
            for (int z : watchers[static_cast<size_t>(b_index[static_cast<size_t>(w)])])
                if (z != v && !mono(z) && mono_if(z, w, flipped_color)) ++damage;
            if (damage < best_damage) {
                best_damage = damage;
                best_w = w;
            }
        }
        int wc = colors[static_cast<size_t>(best_w)];
        colors[static_cast<size_t>(best_w)] =
            (wc == color_pair.first) ? color_pair.second : color_pair.first;
        ++out.rounds;
    }

    if (!solved) {
        if (part_b.size() > 30)
            throw ResourceError("flip budget exhausted and the part is too large for the "
                                "exact search",
                                -1, -1);
        out.fallback_used = true;
        // exact backtracking over part_b; each constraint checked once its last
        // watched position is assigned
        std::vector<int> last_pos(as.size(), -1);
        for (size_t ai = 0; ai < as.size(); ++ai)
            for (int w : g.neighbors(as[ai]))
                last_pos[ai] = std::max(last_pos[ai], b_index[static_cast<size_t>(w)]);
        std::vector<std::vector<int>> due(bs.size());
        for (size_t ai = 0; ai < as.size(); ++ai)
            due[static_cast<size_t>(last_pos[ai])].push_back(as[ai]);

        std::vector<int> assign(bs.size(), 0);
        auto search = [&](auto&& self, size_t pos) -> bool {
            if (pos == bs.size()) return true;
            for (int choice : {color_pair.first, color_pair.second}) {
                assign[pos] = choice;
                bool ok = true;
                for (int z : due[pos]) {
                    // a constraint is satisfied once its neighbors use both colors
                    int first_color = assign[static_cast<size_t>(
                        b_index[static_cast<size_t>(g.neighbors(z)[0])])];
                    bool saw_other = false;
                    for (int y : g.neighbors(z))
                        if (assign[static_cast<size_t>(b_index[static_cast<size_t>(y)])] !=
                            first_color) {
                            saw_other = true;
                            break;
                        }
                    if (!saw_other) {
                        ok = false;
                        break;
                    }
                }
                if (ok && self(self, pos + 1)) return true;
            }
            assign[pos] = 0;
            return false;
        };
        if (!search(search, 0))
            throw InfeasibleError("no two-coloring of the part meets every constraint");
        for (size_t i = 0; i < bs.size(); ++i)
            colors[static_cast<size_t>(bs[i])] = assign[i];
    }

    out.coloring = Coloring(g, std::move(colors));
    return out;
}

FreshColors fresh_colors_after(const Coloring& c) { return FreshColors(max_color(c) + 1); }

Coloring fresh_color_repair(const Coloring& c, FreshColors& fresh,
                            std::vector<std::pair<int, int>>* trace) {
    if (!is_proper(c)) throw InputError("repair needs a proper coloring");
    const Graph& g = c.graph();
    std::vector<int> offenders;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (has_monochromatic_neighborhood(c, v)) offenders.push_back(v);
    Coloring cur = c;
    for (int v : offenders) {
        if (!has_monochromatic_neighborhood(cur, v)) continue;  // fixed by an earlier step
        int u = g.neighbors(v)[0];
        cur = cur.with_color(u, fresh.take());
        if (trace) trace->emplace_back(v, u);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (has_monochromatic_neighborhood(cur, v))
            throw ConsistencyError("fresh-color repair left a one-color neighborhood");
    return cur;
}

Coloring shrink_enclosed_bad(const Graph& g, const Coloring& base,
                             const std::vector<int>& palette) {
    Coloring cur = base;
    while (true) {
        VertexSet bad;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (has_monochromatic_neighborhood(cur, v)) bad.insert(v);
        int enclosed = -1;
        for (int v : bad) {
            bool all_bad = true;
            for (int w : g.neighbors(v))
                if (!bad.contains(w)) {
                    all_bad = false;
                    break;
                }
            if (all_bad) {
                enclosed = v;
                break;
            }
        }
        if (enclosed == -1) return cur;

        bool improved = false;
        for (int x : palette) {
            if (x == cur.color(enclosed)) continue;
            bool clash = false;
            for (int w : g.neighbors(enclosed))
                if (cur.color(w) == x) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            Coloring candidate = cur.with_color(enclosed, x);
            int new_bad = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (has_monochromatic_neighborhood(candidate, v)) ++new_bad;
            if (new_bad < bad.size()) {
                cur = candidate;
                improved = true;
                break;
            }
        }
        if (!improved)
            throw ConsistencyError("descent found no strictly improving recolor; "
                                   "needs at least 3 available colors");
    }
}

Coloring make_bad_set_independent(const Graph& g, const Coloring& base,
                                  const std::array<int, 3>& extra_colors) {
    std::vector<int> used = sorted_distinct_colors(base);
    for (int c : extra_colors) {
        if (c < 1) throw InputError("extra colors must be positive");
        if (std::binary_search(used.begin(), used.end(), c))
            throw InputError("extra color " + std::to_string(c) +
                             " already appears in the base coloring");
    }
    if (extra_colors[0] == extra_colors[1] || extra_colors[0] == extra_colors[2] ||
        extra_colors[1] == extra_colors[2])
        throw InputError("extra colors must be distinct");
    if (!is_proper(base)) throw InputError("base coloring must be proper");

    std::vector<int> palette = used;
    palette.push_back(extra_colors[0]);
    std::sort(palette.begin(), palette.end());
    Coloring cur = shrink_enclosed_bad(g, base, palette);

    BadPartition parts = bad_partition(cur);
    if (!parts.nonisolated_bad.empty()) {
        Bipartition sides;
        try {
            sides = assert_bipartite(parts.nonisolated_bad_graph);
        } catch (const NotBipartiteError&) {
            throw ConsistencyError("touching offenders of a proper coloring must induce a "
                                   "bipartite graph");
        }
        for (int local : sides.part_a)
            cur = cur.with_color(parts.nonisolated_bad_ids[static_cast<size_t>(local)],
                                 extra_colors[1]);
        for (int local : sides.part_b)
            cur = cur.with_color(parts.nonisolated_bad_ids[static_cast<size_t>(local)],
                                 extra_colors[2]);
    }

    BadPartition after = bad_partition(cur);
    if (!is_independent(g, after.bad))
        throw ConsistencyError("offender set still has an internal edge after normalization");
    return cur;
}

RecolorResult split_color_classes(const Graph& g, const Coloring& base,
                                  const ResampleConfig& cfg) {
    if (!is_proper(base)) throw InputError("base coloring must be proper");
    if (g.vertex_count() == 0) throw InputError("graph must be nonempty");
    if (min_max_degree(g).first < 2)
        throw InputError("class splitting requires min degree >= 2");

    const long long k = resample_palette_size(g);
    auto palette_entry = [&](int base_color, uint64_t index) {
        long long id = k * static_cast<long long>(base_color) - (k - 1) +
                       static_cast<long long>(index);
        if (id > std::numeric_limits<int>::max())
            throw InputError("split palette ids exceed the supported color range");
        return static_cast<int>(id);
    };

    Rng rng(cfg.seed);
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        colors[static_cast<size_t>(v)] =
            palette_entry(base.color(v), rng.below(static_cast<uint64_t>(k)));

    auto violated_at = [&]() {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& nb = g.neighbors(v);
            if (nb.size() < 2) continue;
            int first = colors[static_cast<size_t>(nb[0])];
            bool mono = true;
            for (size_t i = 1; i < nb.size(); ++i)
                if (colors[static_cast<size_t>(nb[i])] != first) {
                    mono = false;
                    break;
                }
            if (mono) return v;
        }
        return -1;
    };

    RecolorResult out;
    int max_rounds = resolved_rounds(cfg, g.vertex_count());
    while (true) {
        int v = violated_at();
        if (v == -1) {
            out.coloring = Coloring(g, std::move(colors));
            return out;
        }
        if (out.rounds >= max_rounds) break;
        for (int w : g.neighbors(v))
            colors[static_cast<size_t>(w)] =
                palette_entry(base.color(w), rng.below(static_cast<uint64_t>(k)));
        ++out.rounds;
    }

    if (cfg.fallback == Fallback::Fail)
        throw ResourceError("resampling rounds exhausted", out.rounds, -1);
    out.fallback_used = true;
    Coloring partial(g, std::move(colors));
    FreshColors fresh = fresh_colors_after(partial);
    out.coloring = fresh_color_repair(partial, fresh);
    return out;
}

}  // namespace dynchrome
