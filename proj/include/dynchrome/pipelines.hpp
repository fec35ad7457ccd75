#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dynchrome/coloring.hpp"
#include "dynchrome/graph.hpp"
#include "dynchrome/oracles.hpp"
#include "dynchrome/repair.hpp"

namespace dynchrome {

// Structured record of one algorithm run: what ran, on what input, which
// auxiliary exact values were consulted, the advertised color bound, and
// whether the produced coloring honors it.
struct RunReport {
    int schema_version = 1;
    std::string algorithm;
    std::uint64_t seed = 0;

    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;

    // Exact quantities consulted during the run, keyed by short name
    // ("chi", "alpha", "omega", "matching", "chi2", ...).
    std::map<std::string, long long> oracle_values;

    long long bound_value = 0;
    int colors_used = 0;
    bool proper = false;
    bool dynamic = false;
    bool within_bound = false;
    bool fallback_used = false;
    std::string case_label;

    std::vector<int> colors;            // final coloring, index = vertex id
    nlohmann::json trace = nlohmann::json::array();
    nlohmann::json details;             // algorithm-specific extras (bound tables, discriminants)
    double wall_time_ms = 0.0;
};

// include_timing=false yields a canonical serialization: identical inputs and
// seeds produce byte-identical JSON.
nlohmann::json report_to_json(const RunReport& r, bool include_timing = false);

struct PipelineResult {
    Coloring coloring;
    RunReport report;
};

// Iterated dominate-and-recolor scheme. Each round recolors an independent
// dominating set with a block of fresh colors sized for the resampling
// guarantee; the still-uncovered core shrinks geometrically. Residual bad
// vertices are repaired with fresh colors at the end.
// Bound: base colors + eta*k + 1.
PipelineResult run_theorem3(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget = {},
                            std::optional<long long> alpha_hint = std::nullopt);

// Regular-graph variant: degree <= 3 routes to the exact search; otherwise the
// same iteration as run_theorem3 but each round two-colors its set, so the
// bound drops to base colors + 2*floor(log2(alpha)) + 3.
PipelineResult run_theorem4(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget = {},
                            std::optional<long long> alpha_hint = std::nullopt);

// Case analysis on the bad set of a descent-minimized coloring; overall bound
// base colors + alpha + 1 (per-case values are tighter and recorded).
// Requires a connected graph.
PipelineResult run_theorem5(const Graph& g, const Coloring& base,
                            const OracleBudget& budget = {});

// Normalize to an independent bad set, extend it to a maximal independent set,
// then fix its members in three pairing phases (shared common neighbor, a
// non-adjacent representative pair, then clique representatives).
// Bound: base colors + ceil((alpha + omega)/2) + 3. Requires connectivity.
PipelineResult run_theorem6(const Graph& g, const Coloring& base, const ResampleConfig& cfg,
                            const OracleBudget& budget = {});

// Regular-graph bound via independent-set peeling, with exact routes for
// degree <= 3 (and a complement perfect matching for cubic graphs on >= 8
// vertices). Bound: base colors + 2*ceil(n/r) - 2.
PipelineResult run_theorem7(const Graph& g, const Coloring& base,
                            const OracleBudget& budget = {},
                            const ResampleConfig& cfg = {});

// Normalize, then recolor matched partners of bad vertices and the matched
// neighbors of unmatched bad vertices, one fresh color each.
// Bound: base colors + matching number + 3.
PipelineResult run_theorem8(const Graph& g, const Coloring& base,
                            const OracleBudget& budget = {});

// Palette-splitting recolor of every base class at once.
// Bound: k * base colors where k is the resample palette size.
PipelineResult run_lemma9(const Graph& g, const Coloring& base, const ResampleConfig& cfg);

// Direct fresh-color repair of whatever bad vertices the base coloring has.
// Bound: base colors + |bad set|.
PipelineResult run_lemma6(const Graph& g, const Coloring& base);

// Pure calculator: evaluates every applicable bound formula from exact values,
// no recoloring. Budget overruns degrade to a partial report with the
// unavailable quantities listed.
RunReport bound_report(const Graph& g, const OracleBudget& budget = {});

// Dispatch by CLI token ("theorem3".."theorem8", "lemma9", "lemma6").
PipelineResult run_algorithm(const std::string& name, const Graph& g, const Coloring& base,
                             const ResampleConfig& cfg, const OracleBudget& budget);
const std::vector<std::string>& algorithm_names();

}  // namespace dynchrome
