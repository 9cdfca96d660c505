#pragma once

// Portable seeded randomness. std::mt19937_64 output is fully specified by the
// standard; the distributions here are written out so results do not depend on
// the standard library implementation.

#include <cmath>
#include <cstdint>
#include <random>

namespace modec {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)); }
    std::int64_t range(std::int64_t lo, std::int64_t hi_inclusive) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
    }
    double normal() {
        // Box-Muller; one value per call keeps the sequence simple to reproduce.
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    // Derives an independent stream seed.
    std::uint64_t fork() { return engine_() ^ 0x9E3779B97F4A7C15ull; }

private:
    std::mt19937_64 engine_;
};

}  // namespace modec
