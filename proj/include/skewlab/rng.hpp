#pragma once

#include <cstdint>

namespace skewlab {

// Counter-based deterministic generator (splitmix64 finalizer over
// seed + counter). Every random corpus in the project draws from one of
// these, forked by label, so identical seeds replay identical runs
// regardless of call interleaving elsewhere.
struct Rng {
    std::uint64_t seed = 0;
    std::uint64_t ctr = 0;

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::uint64_t next() { return mix(seed ^ mix(ctr++)); }

    // Uniform in [0, n). n small at desk scale; modulo bias is irrelevant
    // for corpus generation and keeps the stream replayable.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return unit() < p; }

    Rng fork(std::uint64_t label) const { return Rng{mix(seed ^ (label * 0xD1B54A32D192ED03ull)), 0}; }
};

}  // namespace skewlab
