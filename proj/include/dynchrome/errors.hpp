#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dynchrome {

// Caller-supplied data is invalid: bad vertex ids, violated preconditions, parse errors.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search or sampling budget ran out. Carries best-known bounds when the search had any.
struct ResourceError : std::runtime_error {
    long long lower_bound = -1;
    long long upper_bound = -1;
    explicit ResourceError(const std::string& msg, long long lo = -1, long long hi = -1)
        : std::runtime_error(msg), lower_bound(lo), upper_bound(hi) {}
};

// An internal structural guarantee failed; the run cannot certify its own output.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A two-coloring subproblem was exhaustively proven to have no solution
// (as opposed to the search merely running out of budget).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graph that had to be bipartite is not; carries an odd-cycle witness.
struct NotBipartiteError : std::runtime_error {
    std::vector<int> odd_cycle;
    NotBipartiteError(const std::string& msg, std::vector<int> cycle)
        : std::runtime_error(msg), odd_cycle(std::move(cycle)) {}
};

}  // namespace dynchrome
