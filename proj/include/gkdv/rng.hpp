#pragma once

#include <cstdint>
#include <random>

namespace gkdv {

/// Deterministic uniform draws on top of mt19937_64.
///
/// std::uniform_real_distribution is implementation-defined, so seeded runs
/// would not reproduce across standard libraries. This wrapper fixes the
/// mapping from raw 64-bit draws to doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace gkdv
