#ifndef GLYPHREC_RNG_HPP
#define GLYPHREC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

// All randomness in the library flows through mt19937_64 plus the mappings
// below. std::uniform_*_distribution is avoided on purpose: its output is
// implementation-defined, these mappings are not.

namespace glyphrec {

using RngEngine = std::mt19937_64;

// Uniform double in [0, 1), 53 random bits.
inline double uniform_unit(RngEngine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(RngEngine& g, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(g);
}

// Uniform integer in [0, n). Modulo bias is below 2^-32 for the sizes used
// here (n always fits in 32 bits).
inline std::uint64_t uniform_below(RngEngine& g, std::uint64_t n) {
    return g() % n;
}

// Fisher-Yates, one uniform_below draw per step, i descending from n-1 to 1.
template <typename T>
void shuffle_fisher_yates(std::vector<T>& v, RngEngine& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(g, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Engine seeded from a master seed plus stream identifiers, so independently
// regenerable items (e.g. one synthetic sample) own a private stream.
inline RngEngine make_stream(std::uint64_t seed, std::uint32_t a, std::uint32_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), a, b};
    return RngEngine(seq);
}

} // namespace glyphrec

#endif
