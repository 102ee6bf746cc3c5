#pragma once

#include <cstdint>
#include <random>

namespace ctaea {

// Seeded generator with a fixed draw discipline so equal seeds reproduce
// identical streams on every platform. Values are shaped here instead of
// with std::*_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform index in [0, n); n must be positive.
    std::size_t uniform_index(std::size_t n) {
        auto k = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ctaea
