#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace salsa {

// Identifies one independent random stream: the per-graph generator state is
// a pure function of (master_seed, stream_index).
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

// xoshiro256** (Blackman & Vigna) seeded through splitmix64.
//
// All sampling helpers are implemented here rather than through <random>
// distributions, whose output is not specified across standard libraries.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(const SeedSpec& seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    // Uniform on [0, 1) with 53 bits of resolution.
    double uniform();
    // Uniform on the open interval (0, 1).
    double uniform_open();
    // Uniform on the open interval (lo, hi).
    double uniform_open(double lo, double hi);
    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);
    // True with probability p (p >= 1 always true, p <= 0 always false).
    bool bernoulli(double p);

private:
    std::array<std::uint64_t, 4> s_{};
};

// Stateless 64-bit finalizer (splitmix64 output function).
std::uint64_t mix64(std::uint64_t x);

Rng derive_rng(const SeedSpec& seed);

}  // namespace salsa
