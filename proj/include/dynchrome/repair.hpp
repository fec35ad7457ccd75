#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dynchrome/coloring.hpp"
#include "dynchrome/graph.hpp"

namespace dynchrome {

// Outcome of the greedy weighted-domination loop.
struct DominationResult {
    VertexSet dominating_set;  // selected ∪ residual: independent, dominates the targets
    VertexSet selected;        // outside vertices picked by the loop
    VertexSet residual;        // targets never covered from outside
    long long covered = 0;     // Σ coverage counts = |targets| - |residual|
    std::vector<std::pair<int, int>> trace;  // (picked vertex, targets newly covered)
};

// Repeatedly picks the boundary vertex covering the most still-uncovered targets
// (lowest id on ties), retires the picked vertex's boundary neighbors, and discounts
// shared coverage for everyone else. targets must be independent, nonempty, and free
// of degree-0 vertices; the graph must have an edge.
DominationResult independent_dominator_for(const Graph& g, const VertexSet& targets);

enum class Fallback { Fail, FreshColorRepair };

struct ResampleConfig {
    uint64_t seed = 0;
    std::optional<int> max_rounds;  // default: 10 * n * ln(n + 2), at least 1
    Fallback fallback = Fallback::FreshColorRepair;
};

int default_max_rounds(int n);

struct RecolorResult {
    Coloring coloring;
    int rounds = 0;  // resample rounds or local-search flips consumed
    bool fallback_used = false;
};

// Seeded resampling recolor of the independent set t from a fresh palette, so that every
// vertex whose whole neighborhood lies inside t sees two colors there. Needs min degree
// >= 2, at least resample_palette_size(g) palette entries, and palette colors absent
// from V \ t in `base`. Deterministic fallback per cfg on round exhaustion.
RecolorResult recolor_independent_set(const Graph& g, const VertexSet& t,
                                      const std::vector<int>& palette, const Coloring& base,
                                      const ResampleConfig& cfg);

// Two-colors part_b with a fresh color pair so every part_a vertex (all its neighbors in
// part_b) sees both. Seeded start + greedy flips that minimize newly violated vertices,
// then exact backtracking when |part_b| <= 30. InfeasibleError means proven unsolvable,
// ResourceError means the budget ran out before an answer either way.
RecolorResult two_color_part_b(const Graph& g, const VertexSet& part_a,
                               const VertexSet& part_b, std::pair<int, int> color_pair,
                               const Coloring& base, const ResampleConfig& cfg);

// Monotone source of unused color ids.
struct FreshColors {
    int next;
    explicit FreshColors(int first) : next(first) {}
    int take() { return next++; }
};
FreshColors fresh_colors_after(const Coloring& c);

// For each vertex with a monochromatic neighborhood (ascending id, skipping any fixed by
// an earlier step), recolors its lowest-id neighbor with the next fresh color. Always
// terminates with no monochromatic neighborhoods, adding at most one color per initial
// offender. Optional trace records (offending vertex, recolored neighbor).
Coloring fresh_color_repair(const Coloring& c, FreshColors& fresh,
                            std::vector<std::pair<int, int>>* trace = nullptr);

// While some monochromatic-neighborhood vertex has its entire neighborhood inside the
// offender set, recolor it from `palette` so the set strictly shrinks. Needs >= 3
// distinct candidate colors to make progress; returns the improved coloring.
Coloring shrink_enclosed_bad(const Graph& g, const Coloring& base,
                             const std::vector<int>& palette);

// Recolors until the offender set is independent, spending at most the three extra
// colors: the shrink descent first (extra_colors[0] joins the palette), then a proper
// two-coloring of the offenders that still touch each other (extra_colors[1], [2]).
Coloring make_bad_set_independent(const Graph& g, const Coloring& base,
                                  const std::array<int, 3>& extra_colors);

// Refines each base color class into a private subpalette of size
// resample_palette_size(g); resamples violated neighborhoods. Properness is structural
// (subpalettes of distinct classes never overlap).
RecolorResult split_color_classes(const Graph& g, const Coloring& base,
                                  const ResampleConfig& cfg);

}  // namespace dynchrome
