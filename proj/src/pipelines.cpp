#include "dynchrome/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/formulas.hpp"
#include "dynchrome/rng.hpp"

namespace dynchrome {

namespace {

using nlohmann::json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

RunReport make_report(const std::string& algorithm, uint64_t seed, const Graph& g) {
    RunReport r;
    r.algorithm = algorithm;
    r.seed = seed;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    if (r.n > 0) {
        auto [lo, hi] = min_max_degree(g);
        r.min_degree = lo;
        r.max_degree = hi;
    }
    return r;
}

void finalize(RunReport& r, const Coloring& c, long long bound, const Timer& timer) {
    r.bound_value = bound;
    r.colors_used = count_colors(c);
    r.proper = is_proper(c);
    r.dynamic = is_dynamic(c);
    r.within_bound = r.colors_used <= bound;
    r.colors = c.colors();
    r.wall_time_ms = timer.ms();
}

void require_proper(const Coloring& base, const char* who) {
    if (!is_proper(base))
        throw InputError(std::string(who) + ": base coloring is not proper");
}

void require_nonempty(const Graph& g, const char* who) {
    if (g.vertex_count() == 0) throw InputError(std::string(who) + ": empty graph");
}

int require_regular(const Graph& g, const char* who) {
    auto [lo, hi] = min_max_degree(g);
    if (lo != hi) throw InputError(std::string(who) + ": regular graph required");
    return lo;
}

std::vector<int> fresh_block(FreshColors& fresh, int count) {
    std::vector<int> palette;
    palette.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) palette.push_back(fresh.take());
    return palette;
}

// Vertices whose entire (nonempty) neighborhood lies inside t.
VertexSet constrained_by(const Graph& g, const VertexSet& t) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.empty()) continue;
        bool inside = true;
        for (int w : nb)
            if (!t.contains(w)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

json repair_trace_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (auto [offender, recolored] : pairs) arr.push_back({offender, recolored});
    return arr;
}

// Shared skeleton of the two iterated dominate-and-recolor schemes. recolor_round
// recolors the round's target set on top of the current coloring and reports whether
// an out-of-palette repair was needed.
struct IterationOutcome {
    Coloring coloring;
    bool fallback_used = false;
    json trace = json::array();
};

IterationOutcome iterate_dominators(
    const Graph& g, const Coloring& base, int k, uint64_t seed,
    const std::function<std::pair<Coloring, bool>(const Coloring&, const VertexSet&, int, json&)>&
        recolor_round) {
    IterationOutcome out{base};
    VertexSet core = maximal_independent_dominating_set(g, derive_seed(seed, 0));
    VertexSet target = core;
    for (int i = 1; i <= k; ++i) {
        if (i > 1) {
            DominationResult dom = independent_dominator_for(g, core);
            json picks = json::array();
            for (auto [v, covered] : dom.trace) picks.push_back({v, covered});
            out.trace.push_back({{"phase", "dominate"},
                                 {"iteration", i},
                                 {"targets", core.size()},
                                 {"selected", dom.selected.size()},
                                 {"residual", dom.residual.size()},
                                 {"picks", picks}});
            target = dom.dominating_set;
        }
        json round = {{"phase", "recolor"}, {"iteration", i}, {"target_size", target.size()}};
        auto [next, fb] = recolor_round(out.coloring, target, i, round);
        out.coloring = next;
        out.fallback_used = out.fallback_used || fb;
        out.trace.push_back(round);
        if (i > 1) core = target.intersect(core);
        if (core.size() <= 1) break;
    }
    return out;
}

Coloring repair_residual(const Coloring& c, RunReport& report) {
    FreshColors fresh = fresh_colors_after(c);
    std::vector<std::pair<int, int>> pairs;
    Coloring fixed = fresh_color_repair(c, fresh, &pairs);
    report.trace.push_back(
        {{"phase", "residual_repair"}, {"recolored", pairs.size()}, {"pairs", repair_trace_json(pairs)}});
    return fixed;
}

long long oracle_alpha(const Graph& g, const OracleBudget& budget, RunReport& report,
                       std::optional<long long> hint) {
    long long alpha = hint ? *hint : independence_number(g, budget);
    report.oracle_values["alpha"] = alpha;
    return alpha;
}

}  // namespace

json report_to_json(const RunReport& r, bool include_timing) {
    json j;
    j["schema_version"] = r.schema_version;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["input"] = {{"n", r.n}, {"m", r.m}, {"min_degree", r.min_degree}, {"max_degree", r.max_degree}};
    j["oracle_values"] = json::object();
    for (const auto& [name, value] : r.oracle_values) j["oracle_values"][name] = value;
    j["bound_value"] = r.bound_value;
    j["colors_used"] = r.colors_used;
    j["proper"] = r.proper;
    j["dynamic"] = r.dynamic;
    j["within_bound"] = r.within_bound;
    j["fallback_used"] = r.fallback_used;
    j["case_label"] = r.case_label;
    j["colors"] = r.colors;
    j["trace"] = r.trace;
    if (!r.details.is_null()) j["details"] = r.details;
    if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

PipelineResult run_theorem3(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget, std::optional<long long> alpha_hint) {
    Timer timer;
    require_nonempty(g, "theorem3");
    require_proper(base, "theorem3");
    RunReport report = make_report("theorem3", cfg.seed, g);
    int eta = resample_palette_size(g);  // also enforces min degree >= 2
    auto [lo, hi] = min_max_degree(g);
    long long alpha = oracle_alpha(g, budget, report, alpha_hint);
    int k = floor_log_ratio(2LL * hi, 2LL * hi - lo, alpha) + 1;
    int chi_base = count_colors(base);
    long long bound = chi_base + static_cast<long long>(eta) * k + 1;
    report.details = {{"eta", eta}, {"k", k}};

    IterationOutcome it = iterate_dominators(
        g, base, k, cfg.seed,
        [&](const Coloring& cur, const VertexSet& target, int i, json& round) {
            FreshColors fresh = fresh_colors_after(cur);
            std::vector<int> palette = fresh_block(fresh, eta);
            ResampleConfig round_cfg = cfg;
            round_cfg.seed = derive_seed(cfg.seed, static_cast<uint64_t>(i));
            RecolorResult rr = recolor_independent_set(g, target, palette, cur, round_cfg);
            round["rounds"] = rr.rounds;
            round["palette_fallback"] = rr.fallback_used;
            return std::make_pair(rr.coloring, rr.fallback_used);
        });
    report.trace = std::move(it.trace);
    report.fallback_used = it.fallback_used;
    Coloring result = repair_residual(it.coloring, report);
    finalize(report, result, bound, timer);
    return {result, report};
}

PipelineResult run_theorem4(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget, std::optional<long long> alpha_hint) {
    Timer timer;
    require_nonempty(g, "theorem4");
    require_proper(base, "theorem4");
    int r = require_regular(g, "theorem4");
    RunReport report = make_report("theorem4", cfg.seed, g);
    int chi_base = count_colors(base);

    if (r <= 3) {
        Coloring result = optimal_dynamic_coloring(g, budget);
        report.oracle_values["chi2"] = count_colors(result);
        report.case_label = "exact_small_degree";
        finalize(report, result, chi_base + 3LL, timer);
        return {result, report};
    }

    long long alpha = oracle_alpha(g, budget, report, alpha_hint);
    int k = floor_log_ratio(2, 1, alpha) + 1;
    long long bound = chi_base + 2LL * (k - 1) + 3;
    report.case_label = "iterated_pairs";
    report.details = {{"k", k}};

    IterationOutcome it = iterate_dominators(
        g, base, k, cfg.seed,
        [&](const Coloring& cur, const VertexSet& target, int i, json& round) {
            FreshColors fresh = fresh_colors_after(cur);
            int c1 = fresh.take(), c2 = fresh.take();
            VertexSet part_a = constrained_by(g, target);
            ResampleConfig round_cfg = cfg;
            round_cfg.seed = derive_seed(cfg.seed, static_cast<uint64_t>(i));
            RecolorResult rr = two_color_part_b(g, part_a, target, {c1, c2}, cur, round_cfg);
            round["flips"] = rr.rounds;
            round["exact_backtrack"] = rr.fallback_used;
            round["constrained"] = part_a.size();
            // the exact two-coloring search still stays inside the color pair,
            // so it does not jeopardize the bound
            return std::make_pair(rr.coloring, false);
        });
    report.trace = std::move(it.trace);
    report.fallback_used = it.fallback_used;
    Coloring result = repair_residual(it.coloring, report);
    finalize(report, result, bound, timer);
    return {result, report};
}

PipelineResult run_theorem5(const Graph& g, const Coloring& base, const OracleBudget& budget) {
    Timer timer;
    require_nonempty(g, "theorem5");
    if (!is_connected(g)) throw InputError("theorem5: connected graph required");
    require_proper(base, "theorem5");
    RunReport report = make_report("theorem5", 0, g);
    int chi_base = count_colors(base);
    long long alpha = oracle_alpha(g, budget, report, std::nullopt);

    if (chi_base == 1) {
        report.case_label = "single_color";
        finalize(report, base, chi_base + alpha + 1, timer);
        return {base, report};
    }
    if (chi_base == 2) {
        Coloring result = optimal_dynamic_coloring(g, budget);
        report.oracle_values["chi2"] = count_colors(result);
        report.case_label = "two_chromatic_exact";
        finalize(report, result, chi_base + alpha, timer);
        return {result, report};
    }
    if (alpha == 1) {
        report.case_label = "complete";
        finalize(report, base, chi_base + alpha + 1, timer);
        return {base, report};
    }

    // Descend first: no offender may have its whole neighborhood among offenders.
    std::vector<int> palette = base.colors();
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    Coloring cur = shrink_enclosed_bad(g, base, palette);
    BadPartition parts = bad_partition(cur);
    report.trace.push_back({{"phase", "descent"},
                            {"bad_before", bad_partition(base).bad.size()},
                            {"bad_after", parts.bad.size()}});

    long long bound = 0;
    if (parts.nonisolated_bad.empty()) {
        report.case_label = "case1";
        bound = chi_base + alpha;
    } else {
        // Two-color the touching offenders with a fresh pair, one color per side.
        Bipartition sides = assert_bipartite(parts.nonisolated_bad_graph);
        FreshColors fresh = fresh_colors_after(cur);
        int f1 = fresh.take(), f2 = fresh.take();
        std::vector<int> colors = cur.colors();
        for (int local : sides.part_a)
            colors[static_cast<size_t>(parts.nonisolated_bad_ids[static_cast<size_t>(local)])] = f1;
        for (int local : sides.part_b)
            colors[static_cast<size_t>(parts.nonisolated_bad_ids[static_cast<size_t>(local)])] = f2;
        cur = Coloring(g, std::move(colors));
        report.trace.push_back(
            {{"phase", "two_color_touching"}, {"size", parts.nonisolated_bad.size()}});

        BadPartition after = bad_partition(cur);
        if (!after.nonisolated_bad.empty())
            throw ConsistencyError("theorem5: touching offenders survived their recoloring");
        VertexSet x2 = after.bad;
        if (x2.size() <= 1) {
            report.case_label = "case2_small";
            bound = chi_base + 3;
        } else {
            int v = x2.ids().front();
            VertexSet rest = x2;
            rest.erase(v);
            VertexSet common = neighborhood(g, rest).intersect(neighborhood(g, VertexSet{v}));
            if (common.empty()) {
                report.case_label = "case2a";
                bound = chi_base + 2 + (alpha - 1);
            } else {
                int u = -1, w = -1;
                for (int cand : rest) {
                    VertexSet shared =
                        neighborhood(g, VertexSet{cand}).intersect(neighborhood(g, VertexSet{v}));
                    if (!shared.empty()) {
                        u = cand;
                        w = shared.ids().front();
                        break;
                    }
                }
                cur = cur.with_color(w, fresh.take());
                report.trace.push_back(
                    {{"phase", "common_neighbor"}, {"v", v}, {"u", u}, {"recolored", w}});
                report.case_label = "case2b";
                bound = chi_base + 3 + (alpha - 2);
            }
        }
    }

    Coloring result = repair_residual(cur, report);
    finalize(report, result, bound, timer);
    return {result, report};
}

PipelineResult run_theorem6(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget) {
    Timer timer;
    require_nonempty(g, "theorem6");
    if (!is_connected(g)) throw InputError("theorem6: connected graph required");
    require_proper(base, "theorem6");
    RunReport report = make_report("theorem6", cfg.seed, g);
    int chi_base = count_colors(base);
    long long alpha = oracle_alpha(g, budget, report, std::nullopt);
    long long omega = clique_number(g, budget);
    report.oracle_values["omega"] = omega;
    long long bound = chi_base + ceil_div(alpha + omega, 2) + 3;
    if (omega <= 2)
        report.details["triangle_free_bound"] = chi_base + ceil_div(alpha, 2) + 4;

    int top = max_color(base);
    Coloring cur = make_bad_set_independent(g, base, {top + 1, top + 2, top + 3});
    VertexSet bad = bad_partition(cur).bad;
    report.trace.push_back({{"phase", "normalize"}, {"bad", bad.size()}});

    // Extend the offender set to a maximal independent set in seeded order.
    std::vector<int> order(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) order[static_cast<size_t>(v)] = v;
    Rng(derive_seed(cfg.seed, 0)).shuffle(order);
    VertexSet t1 = bad;
    for (int v : order) {
        if (t1.contains(v)) continue;
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (t1.contains(w)) {
                blocked = true;
                break;
            }
        if (!blocked) t1.insert(v);
    }

    FreshColors fresh = fresh_colors_after(cur);
    VertexSet touched;

    // Phase 1: pair members sharing a common neighbor; that neighbor gets its own color.
    VertexSet unpaired = t1;
    int phase1_pairs = 0;
    for (bool found = true; found;) {
        found = false;
        for (int v : unpaired) {
            for (int u : unpaired) {
                if (u <= v) continue;
                VertexSet shared =
                    neighborhood(g, VertexSet{v}).intersect(neighborhood(g, VertexSet{u}));
                if (shared.empty()) continue;
                int w = shared.ids().front();
                cur = cur.with_color(w, fresh.take());
                touched.insert(w);
                ++phase1_pairs;
                unpaired.erase(v);
                unpaired.erase(u);
                found = true;
                break;
            }
            if (found) break;
        }
    }
    report.trace.push_back({{"phase", "pair_common_neighbor"}, {"pairs", phase1_pairs}});

    // Phase 2: pair members admitting untouched non-adjacent representatives that then
    // share one color.
    int phase2_pairs = 0;
    for (bool found = true; found;) {
        found = false;
        for (int v : unpaired) {
            for (int u : unpaired) {
                if (u <= v) continue;
                int rx = -1, ry = -1;
                for (int x : g.neighbors(v)) {
                    if (touched.contains(x)) continue;
                    for (int y : g.neighbors(u)) {
                        if (touched.contains(y) || x == y || g.has_edge(x, y)) continue;
                        rx = x;
                        ry = y;
                        break;
                    }
                    if (rx >= 0) break;
                }
                if (rx < 0) continue;
                int f = fresh.take();
                cur = cur.with_color(rx, f).with_color(ry, f);
                touched.insert(rx);
                touched.insert(ry);
                ++phase2_pairs;
                unpaired.erase(v);
                unpaired.erase(u);
                found = true;
                break;
            }
            if (found) break;
        }
    }
    report.trace.push_back({{"phase", "pair_representatives"}, {"pairs", phase2_pairs}});

    // Phase 3: whoever is left gets one untouched neighbor recolored; those neighbors
    // must form a clique.
    std::vector<int> reps;
    json clique_violations = json::array();
    int phase3_recolored = 0;
    for (int v : unpaired) {
        if (!has_monochromatic_neighborhood(cur, v)) continue;
        int x = -1;
        for (int w : g.neighbors(v))
            if (!touched.contains(w)) {
                x = w;
                break;
            }
        if (x < 0)
            throw ConsistencyError("theorem6: leftover offender has no untouched neighbor");
        for (int prev : reps)
            if (!g.has_edge(prev, x)) clique_violations.push_back({prev, x});
        reps.push_back(x);
        cur = cur.with_color(x, fresh.take());
        touched.insert(x);
        ++phase3_recolored;
    }
    report.trace.push_back({{"phase", "clique_representatives"}, {"recolored", phase3_recolored}});
    if (!clique_violations.empty()) report.details["clique_violations"] = clique_violations;

    if (!is_dynamic(cur)) {
        report.fallback_used = true;
        cur = repair_residual(cur, report);
    }
    finalize(report, cur, bound, timer);
    return {cur, report};
}

PipelineResult run_theorem7(const Graph& g, const Coloring& base, const OracleBudget& budget,
                            const ResampleConfig& cfg) {
    Timer timer;
    require_nonempty(g, "theorem7");
    require_proper(base, "theorem7");
    int r = require_regular(g, "theorem7");
    RunReport report = make_report("theorem7", cfg.seed, g);
    int chi_base = count_colors(base);
    int n = g.vertex_count();

    if (r == 0) {
        report.case_label = "edgeless";
        finalize(report, base, chi_base, timer);
        return {base, report};
    }
    long long bound = chi_base + 2 * ceil_div(n, r) - 2;

    if (r <= 2 || (r == 3 && n <= 7)) {
        Coloring result = optimal_dynamic_coloring(g, budget);
        report.oracle_values["chi2"] = count_colors(result);
        report.case_label = "exact_small_degree";
        finalize(report, result, bound, timer);
        return {result, report};
    }

    if (r == 3) {
        auto pairs = maximum_matching(complement(g), budget);
        if (static_cast<int>(pairs.size()) * 2 != n)
            throw ConsistencyError("theorem7: complement has no perfect matching");
        std::vector<int> colors(static_cast<size_t>(n), 0);
        for (size_t i = 0; i < pairs.size(); ++i) {
            colors[static_cast<size_t>(pairs[i].first)] = static_cast<int>(i) + 1;
            colors[static_cast<size_t>(pairs[i].second)] = static_cast<int>(i) + 1;
        }
        Coloring result(g, std::move(colors));
        // every color class has exactly two members, so three neighbors cannot agree
        if (!is_dynamic(result))
            throw ConsistencyError("theorem7: paired coloring failed the two-color check");
        report.case_label = "complement_matching";
        report.oracle_values["pair_classes"] = static_cast<long long>(pairs.size());
        finalize(report, result, bound, timer);
        return {result, report};
    }

    report.case_label = "peeling";
    int rounds = static_cast<int>(ceil_div(n, r)) - 1;
    Coloring cur = base;
    FreshColors fresh = fresh_colors_after(base);
    VertexSet removed;
    for (int k = 1; k <= rounds; ++k) {
        std::vector<int> rest_ids;
        for (int v = 0; v < n; ++v)
            if (!removed.contains(v)) rest_ids.push_back(v);
        if (rest_ids.empty()) break;
        InducedSubgraph sub = induced_subgraph(g, VertexSet(rest_ids));
        VertexSet local = maximum_independent_set(sub.graph, budget);
        std::vector<int> tk_ids;
        for (int idx : local) tk_ids.push_back(sub.original_ids[static_cast<size_t>(idx)]);
        VertexSet tk(std::move(tk_ids));
        VertexSet part_a = constrained_by(g, tk);
        int c1 = fresh.take(), c2 = fresh.take();
        ResampleConfig round_cfg = cfg;
        round_cfg.seed = derive_seed(cfg.seed, static_cast<uint64_t>(k));
        RecolorResult rr = two_color_part_b(g, part_a, tk, {c1, c2}, cur, round_cfg);
        cur = rr.coloring;
        removed = removed.unite(tk);
        report.trace.push_back({{"phase", "peel"},
                                {"round", k},
                                {"set_size", tk.size()},
                                {"constrained", part_a.size()},
                                {"flips", rr.rounds},
                                {"exact_backtrack", rr.fallback_used}});
    }
    if (!is_dynamic(cur)) {
        report.fallback_used = true;
        cur = repair_residual(cur, report);
    }
    finalize(report, cur, bound, timer);
    return {cur, report};
}

PipelineResult run_theorem8(const Graph& g, const Coloring& base, const OracleBudget& budget) {
    Timer timer;
    require_nonempty(g, "theorem8");
    require_proper(base, "theorem8");
    RunReport report = make_report("theorem8", 0, g);
    int chi_base = count_colors(base);
    auto matching = maximum_matching(g, budget);
    long long alpha_prime = static_cast<long long>(matching.size());
    report.oracle_values["matching"] = alpha_prime;
    long long bound = chi_base + alpha_prime + 3;

    int top = max_color(base);
    Coloring cur = make_bad_set_independent(g, base, {top + 1, top + 2, top + 3});
    VertexSet bad = bad_partition(cur).bad;
    report.trace.push_back({{"phase", "normalize"}, {"bad", bad.size()}});

    std::vector<int> partner(static_cast<size_t>(g.vertex_count()), -1);
    VertexSet matched;
    for (auto [a, b] : matching) {
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
        matched.insert(a);
        matched.insert(b);
    }

    VertexSet targets;
    for (int v : bad) {
        if (matched.contains(v)) {
            targets.insert(partner[static_cast<size_t>(v)]);
        } else {
            for (int w : g.neighbors(v)) {
                if (!matched.contains(w))
                    throw ConsistencyError(
                        "theorem8: two unmatched adjacent vertices contradict maximality");
                targets.insert(w);
            }
        }
    }
    for (auto [a, b] : matching)
        if (targets.contains(a) && targets.contains(b))
            throw ConsistencyError("theorem8: both endpoints of a matched edge need recoloring");

    FreshColors fresh = fresh_colors_after(cur);
    json recolored = json::array();
    for (int s : targets) {
        cur = cur.with_color(s, fresh.take());
        recolored.push_back(s);
    }
    report.trace.push_back({{"phase", "recolor_matched"}, {"vertices", recolored}});

    if (!is_dynamic(cur)) {
        report.fallback_used = true;
        cur = repair_residual(cur, report);
    }
    finalize(report, cur, bound, timer);
    return {cur, report};
}

PipelineResult run_lemma9(const Graph& g, const Coloring& base, const ResampleConfig& cfg) {
    Timer timer;
    require_nonempty(g, "lemma9");
    require_proper(base, "lemma9");
    RunReport report = make_report("lemma9", cfg.seed, g);
    int k = resample_palette_size(g);
    int chi_base = count_colors(base);
    long long bound = static_cast<long long>(k) * chi_base;
    report.details = {{"subpalette_size", k}};
    auto [lo, hi] = min_max_degree(g);
    if (lo > 4)
        report.details["degree_ratio_case"] =
            degree_ratio_dominates(lo, hi) ? "ratio_dominant" : "ratio_modest";

    RecolorResult rr = split_color_classes(g, base, cfg);
    report.trace.push_back(
        {{"phase", "split_classes"}, {"rounds", rr.rounds}, {"palette_fallback", rr.fallback_used}});
    report.fallback_used = rr.fallback_used;
    finalize(report, rr.coloring, bound, timer);
    return {rr.coloring, report};
}

PipelineResult run_lemma6(const Graph& g, const Coloring& base) {
    Timer timer;
    require_nonempty(g, "lemma6");
    require_proper(base, "lemma6");
    RunReport report = make_report("lemma6", 0, g);
    long long bound = count_colors(base) + bad_partition(base).bad.size();
    Coloring result = repair_residual(base, report);
    finalize(report, result, bound, timer);
    return {result, report};
}

RunReport bound_report(const Graph& g, const OracleBudget& budget) {
    Timer timer;
    RunReport report = make_report("bounds", 0, g);
    report.case_label = "calculator";
    json omissions = json::array();

    auto probe = [&](const char* name, const std::function<long long()>& compute) {
        try {
            report.oracle_values[name] = compute();
        } catch (const ResourceError&) {
            omissions.push_back(name);
        }
    };
    probe("chi", [&] { return static_cast<long long>(chromatic_number(g, budget)); });
    probe("chi2", [&] { return static_cast<long long>(dynamic_chromatic_number(g, budget)); });
    probe("alpha", [&] { return static_cast<long long>(independence_number(g, budget)); });
    probe("omega", [&] { return static_cast<long long>(clique_number(g, budget)); });
    probe("matching", [&] { return static_cast<long long>(matching_number(g, budget)); });

    auto have = [&](const char* name) { return report.oracle_values.count(name) > 0; };
    auto val = [&](const char* name) { return report.oracle_values.at(name); };

    int n = g.vertex_count();
    int lo = report.min_degree, hi = report.max_degree;
    bool regular = n > 0 && lo == hi;
    bool connected = n > 0 && is_connected(g);
    json bounds = json::array();
    // kind "total" bounds the color count itself, "difference" bounds the excess over
    // the chromatic number.
    auto add = [&](const char* name, bool applies, const char* kind,
                   const std::vector<const char*>& needs,
                   const std::function<long long()>& value) {
        json entry = {{"name", name}, {"applies", applies}, {"kind", kind}};
        if (applies) {
            std::vector<const char*> missing;
            for (const char* need : needs)
                if (!have(need)) missing.push_back(need);
            if (missing.empty()) {
                entry["value"] = value();
            } else {
                json miss = json::array();
                for (const char* name2 : missing) miss.push_back(name2);
                entry["missing"] = miss;
            }
        }
        bounds.push_back(entry);
    };

    bool c5 = connected && n == 5 && regular && lo == 2;
    add("theorem1", connected, "total", {}, [&]() -> long long {
        if (hi <= 3) return c5 ? 5 : 4;
        return hi + 1;
    });
    add("theorem3", lo >= 2, "difference", {"alpha"}, [&] {
        int eta = resample_palette_size(g);
        int k = floor_log_ratio(2LL * hi, 2LL * hi - lo, val("alpha")) + 1;
        return static_cast<long long>(eta) * k + 1;
    });
    add("corollary1", n > 0 && low_spread_condition(lo, hi) && lo >= 2, "difference", {"alpha"},
        [&] { return 2LL * floor_log_ratio(2LL * hi, 2LL * hi - lo, val("alpha")) + 3; });
    add("theorem4", regular, "difference", {"alpha"},
        [&] { return 2LL * floor_log_ratio(2, 1, val("alpha")) + 3; });
    add("theorem5", n > 0, "difference", {"alpha"}, [&] { return val("alpha") + 1; });
    add("theorem6", n > 0, "difference", {"alpha", "omega"},
        [&] { return ceil_div(val("alpha") + val("omega"), 2) + 3; });
    add("corollary2", n > 0, "difference", {"alpha"}, [&] { return val("alpha") + 3; });
    add("corollary3", n > 0 && have("omega") && val("omega") <= 2, "difference", {"alpha"},
        [&] { return ceil_div(val("alpha"), 2) + 4; });
    add("theorem7", regular && lo >= 1, "difference", {},
        [&] { return 2 * ceil_div(n, lo) - 2; });
    add("theorem8", n > 0, "difference", {"matching"}, [&] { return val("matching") + 3; });
    add("lemma9", lo >= 2, "total", {"chi"},
        [&] { return static_cast<long long>(resample_palette_size(g)) * val("chi"); });

    report.details["bounds"] = bounds;
    if (!omissions.empty()) report.details["omitted_oracles"] = omissions;
    if (lo > 4)
        report.details["degree_ratio_case"] =
            degree_ratio_dominates(lo, hi) ? "ratio_dominant" : "ratio_modest";
    if (have("chi") && have("chi2"))
        report.details["observed_difference"] = val("chi2") - val("chi");
    report.within_bound = true;
    report.wall_time_ms = timer.ms();
    return report;
}

PipelineResult run_algorithm(const std::string& name, const Graph& g, const Coloring& base,
                             const ResampleConfig& cfg, const OracleBudget& budget) {
    if (name == "theorem3") return run_theorem3(g, base, cfg, budget);
    if (name == "theorem4") return run_theorem4(g, base, cfg, budget);
    if (name == "theorem5") return run_theorem5(g, base, budget);
    if (name == "theorem6") return run_theorem6(g, base, cfg, budget);
    if (name == "theorem7") return run_theorem7(g, base, budget, cfg);
    if (name == "theorem8") return run_theorem8(g, base, budget);
    if (name == "lemma9") return run_lemma9(g, base, cfg);
    if (name == "lemma6") return run_lemma6(g, base);
    throw InputError("unknown algorithm: " + name);
}

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"theorem3", "theorem4", "theorem5", "theorem6",
                                                   "theorem7", "theorem8", "lemma9",   "lemma6"};
    return names;
}

}  // namespace dynchrome
