#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace shotgun {

// All randomness in the library flows through mt19937_64 plus the helpers
// below. The standard fully specifies the mt19937_64 output stream, and we
// avoid std::*_distribution (whose mappings are implementation-defined), so
// identical seeds give identical results on any conforming platform.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; used both as a stand-alone mixer and to derive
// independent sub-seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += kSplitmixGamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Sub-seed `stream` of a master seed; streams 0,1,2,... are independent
// for practical purposes. Closed form, so streams can be addressed directly.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master + stream * kSplitmixGamma);
}

// Uniform double in [0, 1) from the top 53 bits; exact and portable.
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

// Fisher-Yates with the portable index sampler above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Uniform random permutation of {0, ..., n-1}.
inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    shuffle(perm, rng);
    return perm;
}

}  // namespace shotgun
