#include "spcp/rng.hpp"

#include <cmath>

#include "spcp/error.hpp"

namespace spcp {

double Rng::next_normal() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    // u1 in (0,1] so log is finite; u2 in [0,1).
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    require(n >= 1, "next_below: n must be >= 1");
    std::uint64_t bound = ~0ULL - ~0ULL % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= bound);
    return x % n;
}

}  // namespace spcp
