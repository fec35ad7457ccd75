#include "dynchrome/formulas.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dynchrome {

using boost::multiprecision::cpp_int;

namespace {

// t^e >= x, overflow-free
bool pow_at_least(long long t, int e, long long x) {
    cpp_int p = 1;
    for (int i = 0; i < e; ++i) {
        p *= t;
        if (p >= x) return true;  // monotone, later factors only grow it (t >= 1)
    }
    return p >= x;
}

}  // namespace

long long ceil_root(long long x, int e) {
    if (x < 1 || e < 1) throw InputError("ceil_root expects x >= 1 and e >= 1");
    long long lo = 1, hi = x;  // x^e >= x, so the answer is at most x
    while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid, e, x))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

int floor_log_ratio(long long p, long long q, long long a) {
    if (q < 1 || p <= q || a < 1)
        throw InputError("floor_log_ratio expects p > q >= 1 and a >= 1");
    cpp_int num = 1, den = 1;
    int j = 0;
    while (true) {
        num *= p;
        den *= q;
        if (num > a * den) return j;  // (p/q)^(j+1) > a
        ++j;
    }
}

long long ceil_div(long long a, long long b) {
    if (b <= 0) throw InputError("ceil_div expects a positive divisor");
    return (a + b - 1) / b;
}

int resample_palette_size(const Graph& g) {
    auto [min_deg, max_deg] = min_max_degree(g);
    if (min_deg < 2) throw InputError("palette size formula needs min degree >= 2");
    long long target = 4LL * max_deg * max_deg;
    return static_cast<int>(ceil_root(target, min_deg - 1));
}

bool low_spread_condition(int min_deg, int max_deg) {
    if (max_deg == 0) return true;
    if (min_deg < 3) return false;  // threshold below 1 while max degree is at least 1
    cpp_int lhs = cpp_int(max_deg) * max_deg;
    cpp_int rhs = cpp_int(1) << (min_deg - 3);
    return lhs <= rhs;
}

bool degree_ratio_dominates(int min_deg, int max_deg) {
    if (min_deg <= 4) throw InputError("degree ratio test requires min degree > 4");
    cpp_int lhs = 1, rhs = 1;
    for (int i = 0; i < min_deg - 4; ++i) lhs *= max_deg;
    for (int i = 0; i < min_deg - 1; ++i) rhs *= min_deg;
    return lhs >= rhs;
}

}  // namespace dynchrome
