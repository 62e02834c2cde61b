#pragma once

// Deterministic randomness for sampling and restarts.
//
// The generator is splitmix64 (Steele, Lea, Flood: "Fast splittable
// pseudorandom number generators", OOPSLA 2014), used counter-style:
// a stream's state is the splitmix64 finalizer applied to the seed
// mixed with a task tag and an index.  Sample i of task t under seed s
// is therefore the same no matter in which order (or on which thread)
// samples are drawn.

#include <cstdint>

namespace rquant {

inline uint64_t splitmix64_mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    // Independent stream for (seed, task, index).
    Rng(uint64_t seed, uint64_t task, uint64_t index)
        : state_(splitmix64_mix(splitmix64_mix(seed ^ (task * 0x9e3779b97f4a7c15ULL)) ^ index)) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from {0, ..., n-1} by rejection.
    uint64_t next_below(uint64_t n) {
        uint64_t limit = n * (~0ULL / n);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

}  // namespace rquant
