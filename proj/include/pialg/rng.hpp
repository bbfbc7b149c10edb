#ifndef PIALG_RNG_HPP
#define PIALG_RNG_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace pialg {

inline uint64_t global_seed() {
    if (const char* s = std::getenv("PIALG_SEED"))
        return static_cast<uint64_t>(std::strtoull(s, nullptr, 10));
    return 0;
}

// Stable per-context stream: same (seed, tag) always yields the same draws,
// independent of what other components consumed.
inline std::mt19937_64 seeded_rng(uint64_t seed, const std::string& tag) {
    uint64_t h = 1469598103934665603ull ^ seed;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return std::mt19937_64(h);
}

} // namespace pialg

#endif
