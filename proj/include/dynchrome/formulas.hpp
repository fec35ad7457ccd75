#pragma once

#include "dynchrome/graph.hpp"

namespace dynchrome {

// Smallest t >= 1 with t^e >= x. Exact integer arithmetic; x >= 1, e >= 1.
long long ceil_root(long long x, int e);

// Largest j >= 0 with (p/q)^j <= a, for integers p > q >= 1 and a >= 1.
// Computed by exact big-integer comparison, never through a float log.
int floor_log_ratio(long long p, long long q, long long a);

long long ceil_div(long long a, long long b);

// Palette size ceil((4*max_deg^2)^(1/(min_deg-1))); requires min degree >= 2.
int resample_palette_size(const Graph& g);

// True when max_deg <= 2^((min_deg-3)/2), i.e. max_deg^2 <= 2^(min_deg-3). Exact.
bool low_spread_condition(int min_deg, int max_deg);

// For min_deg > 4: whether max_deg/min_deg >= min_deg^(3/(min_deg-4)),
// i.e. max_deg^(min_deg-4) >= min_deg^(min_deg-1). Exact big-integer comparison.
bool degree_ratio_dominates(int min_deg, int max_deg);

}  // namespace dynchrome
