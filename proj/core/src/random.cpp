#include "nilgen/random.hpp"

#include <vector>

#include "nilgen/errors.hpp"

namespace nilgen {

namespace {

constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) {
        s += kSplitMixGamma;
        word = splitmix64_mix(s);
    }
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

Integer Rng::uniform_below(const Integer& bound) {
    if (bound <= 0) throw invalid_input_error("uniform_below requires bound >= 1");
    if (bound == 1) return Integer(0);
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 64 + 63) / 64;
    std::vector<std::uint64_t> raw(words);
    for (auto& w : raw) w = next_u64();
    Integer wide;
    mpz_import(wide.get_mpz_t(), raw.size(), -1, sizeof(std::uint64_t), 0, 0, raw.data());
    Integer out;
    mpz_mod(out.get_mpz_t(), wide.get_mpz_t(), bound.get_mpz_t());
    return out;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    return splitmix64_mix(master_seed + (trial_index + 1) * kSplitMixGamma);
}

}  // namespace nilgen
