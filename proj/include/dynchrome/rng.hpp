#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dynchrome {

// Deterministic 64-bit generator (splitmix64). Same seed, same sequence, any platform —
// the std distributions are implementation-defined, so they are not used anywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1. Modulo bias is irrelevant at these ranges.
    uint64_t below(uint64_t bound) { return next_u64() % bound; }

    // Uniform in [lo, hi], inclusive.
    int pick(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(static_cast<uint64_t>(i)));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

// Independent stream for a numbered subtask of a seeded computation.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    Rng r(seed + 0x9e3779b97f4a7c15ULL * (salt + 1));
    return r.next_u64();
}

}  // namespace dynchrome
