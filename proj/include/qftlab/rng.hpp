#pragma once

#include <cstdint>

namespace qftlab {

/// splitmix64, the usual tiny counter-friendly generator. Streams are
/// derived per sample from (seed, n, m, sample index), so results do not
/// depend on how samples are scheduled across workers.
struct Splitmix64 {
    uint64_t state;

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline uint64_t mix_key(uint64_t key, uint64_t value) {
    Splitmix64 g{key ^ (value + 0x9E3779B97F4A7C15ull)};
    return g.next();
}

}  // namespace qftlab
