#pragma once

#include <cstdint>

namespace spcp {

// Deterministic generator built on splitmix64 (Steele et al., fixed
// constants, no platform-dependent state). Identical seeds reproduce the
// integer stream bit-exactly on every platform.
//
// Substreams: split(key) derives an independent child generator from the
// *initial* seed and the key, so consuming one stream never perturbs
// another. The derivation is child_seed = finalize(seed0 + GOLDEN * (key+1)).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed0_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; consumes two uniforms per pair and
    // caches the second deviate.
    double next_normal();

    // Unbiased uniform integer in [0, n), n >= 1, by rejection.
    std::uint64_t next_below(std::uint64_t n);

    Rng split(std::uint64_t key) const {
        return Rng(finalize(seed0_ + 0x9E3779B97F4A7C15ULL * (key + 1)));
    }

    std::uint64_t seed() const { return seed0_; }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed0_;
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace spcp
