#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "dynchrome/graph.hpp"
#include "dynchrome/oracles.hpp"
#include "dynchrome/pipelines.hpp"
#include "dynchrome/repair.hpp"

namespace dynchrome {

// One batch: a graph family, how many trials, and which algorithms to run on each
// instance. "exact" (oracle values) and "lemma4" (domination-overlap probe) are accepted
// alongside the coloring algorithm names.
struct ExperimentSpec {
    std::string family;  // random-regular | gab | prop2 | matching-example |
                         // two-subdivision-complete | named
    std::map<std::string, long long> parameters;
    std::string name;  // catalog key when family == "named"
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> algorithms;
    OracleBudget budget;
};

ExperimentSpec parse_experiment_spec(const nlohmann::json& j, const OracleBudget& default_budget);

// Catalog instances: "petersen", "q3", "cN", "pN", "kN", "kA_B" (e.g. "k3_3").
Graph named_graph(const std::string& name);

// The trial's input graph; deterministic per (spec, trial).
Graph experiment_instance(const ExperimentSpec& spec, int trial);

// Runs the batch; per-trial failures are recorded and do not abort the batch.
// Identical spec (including seed) gives an identical report.
nlohmann::json run_experiment(const ExperimentSpec& spec);

// Runs one coloring algorithm with component splitting: each connected component gets
// its own oracle base coloring and pipeline run; colorings merge under a shared base
// palette with per-component fresh-color namespaces above it.
PipelineResult run_split(const std::string& algorithm, const Graph& g,
                         const ResampleConfig& cfg, const OracleBudget& budget);

}  // namespace dynchrome
