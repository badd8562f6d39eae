// Seeded RNG helpers. std::uniform_real_distribution is implementation
// defined, so uniform doubles are derived from raw engine output directly
// to keep results byte-identical across standard libraries.

#ifndef D2DPC_RNG_HPP
#define D2DPC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace d2dpc {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits of the engine output.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Log-uniform over [lo, hi], lo > 0.
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace d2dpc

#endif  // D2DPC_RNG_HPP
