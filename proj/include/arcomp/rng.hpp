#pragma once

#include <cstdint>
#include <random>

namespace arcomp {

// All seeded randomness in the library goes through these helpers so results
// are reproducible bit-for-bit across platforms and standard libraries.
// std::mt19937_64 is fully specified by the standard; the distributions in
// <random> are not, so we never use them.

using Rng = std::mt19937_64;

// Uniform integer in [0, n), rejection-sampled (no modulo bias).
inline std::uint64_t bounded(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * canonical(rng);
}

}  // namespace arcomp
