#pragma once

#include <cmath>
#include <cstdint>

#include "hamlab/error.hpp"

namespace hamlab {

/// splitmix64. The state advances by a fixed increment per draw, so the
/// stream can be repositioned to any draw offset in O(1).
class SplitMix64 {
   public:
    static constexpr std::uint64_t increment = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        ++draws_;
        std::uint64_t z = (state_ += increment);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound) by modular reduction.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Reposition so that the next draw is draw number `offset` of the stream.
    void seek(std::uint64_t offset) {
        draws_ = offset;
        state_ = seed_ + offset * increment;
    }

    std::uint64_t seed() const { return seed_; }
    /// Number of draws consumed since the seed.
    std::uint64_t draws() const { return draws_; }

   private:
    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

/// floor(p * 2^64) for 0 < p < 1; a draw below it is a success with probability p.
inline std::uint64_t probability_threshold(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("probability must lie strictly between 0 and 1");
    return static_cast<std::uint64_t>(std::floor(std::ldexp(p, 64)));
}

}  // namespace hamlab
