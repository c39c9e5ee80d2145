#pragma once

#include <array>
#include <cstdint>

#include "nilgen/numeric.hpp"

namespace nilgen {

// Deterministic pseudorandom source. The generator is pinned to
// xoshiro256** seeded through splitmix64 so that streams are
// bit-identical across platforms and standard libraries; nothing here
// depends on std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0, bound) for bound >= 1. Draws ceil((bits(bound)+64)/64)
    // words and reduces modulo bound; the statistical distance from uniform
    // is below 2^-64. bound == 1 consumes no words.
    Integer uniform_below(const Integer& bound);

private:
    std::array<std::uint64_t, 4> state_;
};

// The seed of trial i under master seed s is the (i+1)-th output of a
// splitmix64 stream started at s. Closed form, so independently seeded
// trials can run in any order (or in parallel) with identical results.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace nilgen
