#pragma once

#include "exm/rational.hpp"

#include <cstdint>

namespace exm {

/// Deterministic splittable RNG (splitmix64). Randomized check batches
/// seed one stream per case index, so reports are byte-identical across
/// runs and parallelism levels.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for a sub-task; mixing the label keeps streams
    /// decorrelated for nearby indices.
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed + 0x9e3779b97f4a7c15ull * (stream + 1));
        r.next();
        return r;
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return next() & 1u; }

    /// Rational with numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long long max_num, long long max_den) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    /// Nonnegative rational with numerator in [0, max_num].
    Rational nonneg_rational(long long max_num, long long max_den) {
        return Rational(uniform(0, max_num), uniform(1, max_den));
    }

private:
    std::uint64_t state_;
};

}  // namespace exm
