#pragma once

#include <cstdint>

#include "nilgen/group.hpp"
#include "nilgen/profile.hpp"

namespace nilgen {

// phi_k(G): the probability that k independent uniform samples
// generate G, as an exact rational.
struct PhiValue {
    long k = 0;
    Rational value;
    NilpotentProfile group_descriptor;
};

struct MonteCarloEstimate {
    Integer trials;
    Integer successes;
    Rational point_estimate;
    Rational confidence_halfwidth;  // two-sided 99%, see normal99_halfwidth
    std::uint64_t seed = 0;
};

// Probability that k uniform samples generate (Z_p)^r:
//   prod_{i=0}^{r-1} (1 - p^(i-k))   for k >= r,
//   0 for k < r (r >= 1), and 1 for r = 0.
// By the Frattini-quotient reduction this is also the value for any
// p-group of rank r.
Rational phi_p_rank(const Integer& p, long r, long k);

// Product over the profile's Sylow entries of phi_p_rank(p, r_p, k).
// Chain lengths do not enter the value.
PhiValue phi_profile(const NilpotentProfile& profile, long k);

PhiValue phi_abelian(const AbelianGroup& g, long k);

inline const Integer kDefaultTupleCap = Integer(10000000);

// Brute-force count of generating k-tuples: enumerates all |G|^k tuples
// and spans each one. Once a prefix already spans G the remaining
// completions are counted in bulk. Independent route against the
// closed-form phi values.
Integer count_generating_tuples(const AbelianGroup& g, long k,
                                const Integer& cap = kDefaultTupleCap);

// Monte Carlo companion of phi_abelian. Trial i is driven by an Rng
// seeded with trial_seed(seed, i), so results do not depend on
// evaluation order.
MonteCarloEstimate estimate_phi(const AbelianGroup& g, long k, long trials,
                                std::uint64_t seed);

}  // namespace nilgen
