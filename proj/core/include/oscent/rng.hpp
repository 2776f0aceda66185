#pragma once

#include <cstdint>

namespace oscent::rng {

/// Counter-based random values built on the SplitMix64 finalizer
/// (Steele, Lea and Flood, "Fast splittable pseudorandom number generators",
/// OOPSLA 2014). Each draw is a pure function of (seed, stream, index): the
/// key is folded with the golden-ratio increment and passed through the
/// finalizer once per component. Draws do not depend on evaluation order,
/// so sampled ensembles are reproducible bit for bit at any thread count.

inline constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t z = mix(seed + golden * (stream + 1));
    z = mix(z + golden * (index + 1));
    return z;
}

/// Uniform double in [0, 1) from the top 53 bits of a draw.
constexpr double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return static_cast<double>(draw(seed, stream, index) >> 11) * 0x1.0p-53;
}

} // namespace oscent::rng
