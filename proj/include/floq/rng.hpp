#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace floq {

// Deterministic per-realization RNG streams. Stream k of (master_seed, salt)
// is derived by a counter-based splitmix64 hash, so results are independent
// of worker count and scheduling; the same (master, stream, salt) triple
// always produces the same engine state.
//
// All deviates below are generated from raw mt19937_64 words rather than
// std::uniform_real_distribution / std::normal_distribution, whose output
// sequences are implementation-defined.

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

inline std::mt19937_64 stream_rng(std::uint64_t master_seed, std::uint64_t stream,
                                  std::uint64_t salt = 0) {
    std::uint64_t s = master_seed;
    s ^= 0xD1B54A32D192ED03ull * (stream + 1);
    s ^= 0x8CB92BA72F3D8DD7ull * (salt + 1);
    std::uint64_t w[4];
    for (auto& wi : w) wi = detail::splitmix64(s);
    std::seed_seq seq{
        static_cast<std::uint32_t>(w[0]), static_cast<std::uint32_t>(w[0] >> 32),
        static_cast<std::uint32_t>(w[1]), static_cast<std::uint32_t>(w[1] >> 32),
        static_cast<std::uint32_t>(w[2]), static_cast<std::uint32_t>(w[2] >> 32),
        static_cast<std::uint32_t>(w[3]), static_cast<std::uint32_t>(w[3] >> 32)};
    return std::mt19937_64(seq);
}

// Stream salts; keeps gate draws, Monte-Carlo reference draws, etc. on
// disjoint streams even for the same realization index.
enum : std::uint64_t {
    kSaltGates = 0,
    kSaltHaarState = 1,
    kSaltSweepPoint = 2,
};

/// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [0, 2π).
inline double uniform_angle(std::mt19937_64& rng) {
    return 2.0 * M_PI * uniform01(rng);
}

/// Standard normal pair via Box–Muller (stateless).
inline void gaussian_pair(std::mt19937_64& rng, double& a, double& b) {
    double u = 1.0 - uniform01(rng); // (0, 1], keeps log finite
    double v = uniform01(rng);
    double rad = std::sqrt(-2.0 * std::log(u));
    a = rad * std::cos(2.0 * M_PI * v);
    b = rad * std::sin(2.0 * M_PI * v);
}

/// Complex Gaussian with unit-variance real and imaginary parts.
inline std::complex<double> complex_gaussian(std::mt19937_64& rng) {
    double a, b;
    gaussian_pair(rng, a, b);
    return {a, b};
}

} // namespace floq
