#include "dynchrome/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <set>

#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/rng.hpp"

namespace dynchrome {

namespace {

using nlohmann::json;

const std::set<std::string>& family_names() {
    static const std::set<std::string> families = {
        "random-regular", "gab", "prop2", "matching-example", "two-subdivision-complete",
        "named"};
    return families;
}

bool known_algorithm(const std::string& name) {
    if (name == "exact" || name == "lemma4") return true;
    const auto& names = algorithm_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

void validate_spec(const ExperimentSpec& spec) {
    if (!family_names().count(spec.family))
        throw InputError("unknown experiment family: " + spec.family);
    if (spec.trials < 1) throw InputError("trials must be >= 1");
    if (spec.algorithms.empty()) throw InputError("no algorithms requested");
    for (const auto& name : spec.algorithms)
        if (!known_algorithm(name)) throw InputError("unknown algorithm: " + name);
}

long long require_param(const ExperimentSpec& spec, const std::string& key) {
    auto it = spec.parameters.find(key);
    if (it == spec.parameters.end())
        throw InputError("family " + spec.family + " needs parameter '" + key + "'");
    return it->second;
}

int int_param(const ExperimentSpec& spec, const std::string& key) {
    long long raw = require_param(spec, key);
    if (raw < 0 || raw > 1'000'000) throw InputError("parameter '" + key + "' out of range");
    return static_cast<int>(raw);
}

bool parse_sized(const std::string& text, size_t from, int& value) {
    if (from >= text.size()) return false;
    long long acc = 0;
    for (size_t i = from; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        acc = acc * 10 + (text[i] - '0');
        if (acc > 1'000'000) return false;
    }
    value = static_cast<int>(acc);
    return true;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const InputError*>(&e)) return "input";
    if (dynamic_cast<const ResourceError*>(&e)) return "resource";
    if (dynamic_cast<const ConsistencyError*>(&e) || dynamic_cast<const NotBipartiteError*>(&e) ||
        dynamic_cast<const InfeasibleError*>(&e))
        return "consistency";
    return "other";
}

}  // namespace

ExperimentSpec parse_experiment_spec(const json& j, const OracleBudget& default_budget) {
    if (!j.is_object()) throw InputError("experiment spec must be a JSON object");
    static const std::set<std::string> keys = {"family",     "parameters", "name",  "trials",
                                              "seed",       "algorithms", "budget"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!keys.count(it.key())) throw InputError("unknown spec key: " + it.key());

    ExperimentSpec spec;
    spec.budget = default_budget;
    try {
        spec.family = j.at("family").get<std::string>();
        if (j.contains("parameters")) {
            if (!j["parameters"].is_object()) throw InputError("parameters must be an object");
            for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it)
                spec.parameters[it.key()] = it.value().get<long long>();
        }
        if (j.contains("name")) spec.name = j["name"].get<std::string>();
        if (j.contains("trials")) spec.trials = j["trials"].get<int>();
        if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
        for (const auto& a : j.at("algorithms")) spec.algorithms.push_back(a.get<std::string>());
        if (j.contains("budget")) {
            const json& b = j["budget"];
            if (b.contains("max_vertices")) spec.budget.max_vertices = b["max_vertices"].get<int>();
            if (b.contains("max_nodes")) spec.budget.max_nodes = b["max_nodes"].get<long long>();
            if (b.contains("timeout_seconds"))
                spec.budget.timeout_seconds = b["timeout_seconds"].get<double>();
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("bad experiment spec: ") + e.what());
    }
    validate_spec(spec);
    return spec;
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "q3" || name == "cube") return cube_q3();
    int size = 0;
    if (!name.empty() && name[0] == 'c' && parse_sized(name, 1, size)) return cycle(size);
    if (!name.empty() && name[0] == 'p' && parse_sized(name, 1, size)) return path(size);
    if (!name.empty() && name[0] == 'k') {
        auto sep = name.find('_');
        if (sep == std::string::npos) {
            if (parse_sized(name, 1, size)) return complete(size);
        } else {
            int a = 0, b = 0;
            std::string left = name.substr(1, sep - 1);
            if (parse_sized(left, 0, a) && parse_sized(name, sep + 1, b))
                return complete_bipartite(a, b);
        }
    }
    throw InputError("unknown named graph: " + name);
}

Graph experiment_instance(const ExperimentSpec& spec, int trial) {
    if (spec.family == "random-regular") {
        int n = int_param(spec, "n");
        int r = int_param(spec, "r");
        return random_regular(n, r, derive_seed(spec.seed, 2ULL * static_cast<uint64_t>(trial)));
    }
    if (spec.family == "gab") return gab_graph(int_param(spec, "a"), int_param(spec, "b"));
    if (spec.family == "prop2") return prop2_graph(int_param(spec, "a"), int_param(spec, "b"));
    if (spec.family == "matching-example")
        return matching_lower_bound_graph(int_param(spec, "a"));
    if (spec.family == "two-subdivision-complete")
        return two_subdivision(complete(int_param(spec, "n")));
    if (spec.family == "named") return named_graph(spec.name);
    throw InputError("unknown experiment family: " + spec.family);
}

PipelineResult run_split(const std::string& algorithm, const Graph& g, const ResampleConfig& cfg,
                         const OracleBudget& budget) {
    if (g.vertex_count() == 0) throw InputError("empty graph");
    auto start = std::chrono::steady_clock::now();
    std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() == 1) {
        Coloring base = optimal_proper_coloring(g, budget);
        return run_algorithm(algorithm, g, base, cfg, budget);
    }

    struct CompRun {
        InducedSubgraph sub;
        PipelineResult result;
        int base_colors = 0;
    };
    std::vector<CompRun> runs;
    int shared_base = 0;
    long long extra_allowance = 0;
    bool fallback = false;
    for (size_t i = 0; i < comps.size(); ++i) {
        InducedSubgraph sub = induced_subgraph(g, comps[i]);
        Coloring base = optimal_proper_coloring(sub.graph, budget);
        int chi_comp = count_colors(base);
        ResampleConfig comp_cfg = cfg;
        comp_cfg.seed = derive_seed(cfg.seed, i);
        PipelineResult res = run_algorithm(algorithm, sub.graph, base, comp_cfg, budget);
        shared_base = std::max(shared_base, chi_comp);
        extra_allowance += res.report.bound_value - chi_comp;
        fallback = fallback || res.report.fallback_used;
        runs.push_back({std::move(sub), std::move(res), chi_comp});
    }

    // Merge: base colors (<= the component's chromatic number) are shared across
    // components; every color above it moves into a per-component block after the
    // shared range, keeping per-component injectivity.
    std::vector<int> merged(static_cast<size_t>(g.vertex_count()), 0);
    int fresh_used = 0;
    for (const CompRun& run : runs) {
        std::vector<int> added;
        for (int c : run.result.coloring.colors())
            if (c > run.base_colors) added.push_back(c);
        std::sort(added.begin(), added.end());
        added.erase(std::unique(added.begin(), added.end()), added.end());
        const auto& locals = run.result.coloring.colors();
        for (size_t lv = 0; lv < locals.size(); ++lv) {
            int c = locals[lv];
            if (c > run.base_colors) {
                auto rank = std::lower_bound(added.begin(), added.end(), c) - added.begin();
                c = shared_base + fresh_used + static_cast<int>(rank) + 1;
            }
            merged[static_cast<size_t>(run.sub.original_ids[lv])] = c;
        }
        fresh_used += static_cast<int>(added.size());
    }
    Coloring merged_coloring(g, std::move(merged));

    RunReport report;
    report.algorithm = algorithm;
    report.seed = cfg.seed;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    auto [lo, hi] = min_max_degree(g);
    report.min_degree = lo;
    report.max_degree = hi;
    report.bound_value = shared_base + extra_allowance;
    report.colors_used = count_colors(merged_coloring);
    report.proper = is_proper(merged_coloring);
    report.dynamic = is_dynamic(merged_coloring);
    report.within_bound = report.colors_used <= report.bound_value;
    report.fallback_used = fallback;
    report.case_label = "components";
    report.colors = merged_coloring.colors();
    report.trace.push_back({{"phase", "split"}, {"components", comps.size()}});
    json comp_reports = json::array();
    for (const CompRun& run : runs) comp_reports.push_back(report_to_json(run.result.report));
    report.details["components"] = comp_reports;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return {merged_coloring, report};
}

json run_experiment(const ExperimentSpec& spec) {
    validate_spec(spec);
    json trials = json::array();
    long long runs_total = 0, failures = 0, bound_violations = 0, fallback_count = 0;
    long long max_difference = 0;
    bool have_difference = false;
    std::map<int, long long> overlap_histogram;
    int overlap_max = -1;
    long long ratio_violations = 0;

    for (int t = 0; t < spec.trials; ++t) {
        json trial;
        trial["trial"] = t;
        Graph instance;
        try {
            instance = experiment_instance(spec, t);
        } catch (const std::exception& e) {
            trial["instance_error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
            ++failures;
            trials.push_back(trial);
            continue;
        }
        trial["instance"] = {{"n", instance.vertex_count()}, {"m", instance.edge_count()}};
        uint64_t trial_seed = derive_seed(spec.seed, 2ULL * static_cast<uint64_t>(t) + 1);

        json runs = json::array();
        for (size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
            const std::string& algo = spec.algorithms[ai];
            uint64_t run_seed = derive_seed(trial_seed, ai);
            json run;
            run["algorithm"] = algo;
            ++runs_total;
            try {
                if (algo == "exact") {
                    long long chi = chromatic_number(instance, spec.budget);
                    long long chi2 = dynamic_chromatic_number(instance, spec.budget);
                    run["chi"] = chi;
                    run["chi2"] = chi2;
                    run["difference"] = chi2 - chi;
                    if (!have_difference || chi2 - chi > max_difference)
                        max_difference = chi2 - chi;
                    have_difference = true;
                    run["ok"] = true;
                } else if (algo == "lemma4") {
                    VertexSet t1 = maximal_independent_dominating_set(instance, run_seed);
                    DominationResult dom = independent_dominator_for(instance, t1);
                    int overlap = dom.dominating_set.intersect(t1).size();
                    auto [dlo, dhi] = min_max_degree(instance);
                    bool within_ratio =
                        2LL * dhi * overlap <= (2LL * dhi - dlo) * t1.size();
                    run["t1_size"] = t1.size();
                    run["overlap"] = overlap;
                    run["within_ratio"] = within_ratio;
                    if (!within_ratio) ++ratio_violations;
                    ++overlap_histogram[overlap];
                    overlap_max = std::max(overlap_max, overlap);
                    run["ok"] = true;
                } else {
                    ResampleConfig cfg;
                    cfg.seed = run_seed;
                    PipelineResult res = run_split(algo, instance, cfg, spec.budget);
                    run["ok"] = true;
                    run["colors_used"] = res.report.colors_used;
                    run["bound_value"] = res.report.bound_value;
                    run["proper"] = res.report.proper;
                    run["dynamic"] = res.report.dynamic;
                    run["within_bound"] = res.report.within_bound;
                    run["fallback_used"] = res.report.fallback_used;
                    run["case_label"] = res.report.case_label;
                    if (res.report.fallback_used) ++fallback_count;
                    if (!res.report.within_bound && !res.report.fallback_used) ++bound_violations;
                }
            } catch (const std::exception& e) {
                run["ok"] = false;
                run["error_kind"] = error_kind(e);
                run["message"] = e.what();
                ++failures;
            }
            runs.push_back(run);
        }
        trial["runs"] = runs;
        trials.push_back(trial);
    }

    json aggregates;
    aggregates["runs"] = runs_total;
    aggregates["failures"] = failures;
    aggregates["bound_violations"] = bound_violations;
    aggregates["fallback_count"] = fallback_count;
    aggregates["max_difference"] = have_difference ? json(max_difference) : json(nullptr);
    if (overlap_max >= 0) {
        json hist = json::array();
        for (const auto& [size, count] : overlap_histogram) hist.push_back({size, count});
        aggregates["overlap"] = {
            {"max", overlap_max}, {"histogram", hist}, {"ratio_violations", ratio_violations}};
    }

    json out;
    out["schema_version"] = 1;
    out["family"] = spec.family;
    if (!spec.parameters.empty()) {
        json params;
        for (const auto& [key, value] : spec.parameters) params[key] = value;
        out["parameters"] = params;
    }
    if (!spec.name.empty()) out["name"] = spec.name;
    out["trials_requested"] = spec.trials;
    out["seed"] = spec.seed;
    out["algorithms"] = spec.algorithms;
    out["trials"] = trials;
    out["aggregates"] = aggregates;
    return out;
}

}  // namespace dynchrome
