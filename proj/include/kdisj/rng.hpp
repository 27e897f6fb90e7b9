#pragma once

#include "kdisj/errors.hpp"

#include <cstdint>
#include <random>

namespace kdisj {

// Project-wide PRNG: MT19937-64, whose output sequence is fixed by the C++
// standard, so results are bit-reproducible across platforms. Distributions
// are implemented here instead of <random>'s (those are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n) via rejection, avoiding modulo bias.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw InvalidArgument("uniform_below: n must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace kdisj
