#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace ymsurf {

// Counter-based pseudorandom stream (splitmix64 finalizer over an affine
// counter). Streams are keyed by a root seed plus a path of stream ids,
// so (seed, chain, sweep) and similar tuples give independent,
// reproducible substreams regardless of thread scheduling.
//
// Output is identical across platforms: no std::*_distribution is used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed + kGolden)) {}

    Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> path) : Rng(seed) {
        for (std::uint64_t id : path) state_ = mix(state_ ^ mix(id + kGolden));
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; second value of each pair is cached.
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free modulo is fine here: n is tiny (edge counts).
        return next_u64() % n;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace ymsurf
