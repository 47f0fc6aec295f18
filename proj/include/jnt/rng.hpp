#pragma once

#include <cmath>
#include <cstdint>

#include "vector_view.hpp"

namespace jnt {

/// Deterministic 48-bit linear congruential generator:
///     state <- (25214903917 * state + 11) mod 2^48
/// seeded with seed mod 2^48, uniform output state / 2^48 in [0, 1)
/// built from all 48 bits.  The same seed always reproduces the same
/// stream, which is what the benchmark checksums rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept : seed_(seed), state_(seed & kMask) {}

    /// Next uniform deviate in [0, 1).
    double next_uniform() noexcept {
        state_ = (kMultiplier * state_ + kIncrement) & kMask;
        return static_cast<double>(state_) * 0x1p-48;
    }

    /// Next standard normal deviate by the Marsaglia polar method.  The
    /// paired second deviate is discarded, not cached, so the output is a
    /// pure function of the state.
    double next_gaussian() noexcept {
        for (;;) {
            const double u = 2.0 * next_uniform() - 1.0;
            const double v = 2.0 * next_uniform() - 1.0;
            const double s = u * u + v * v;
            if (s >= 1.0 || s == 0.0) continue;
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }

    /// Fill a view with consecutive uniform deviates.
    void fill_uniform(VectorView v) noexcept {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = next_uniform();
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t state() const noexcept { return state_; }

private:
    static constexpr std::uint64_t kMultiplier = 25214903917ULL;
    static constexpr std::uint64_t kIncrement = 11ULL;
    static constexpr std::uint64_t kMask = (1ULL << 48) - 1;

    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace jnt
