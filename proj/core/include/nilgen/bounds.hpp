#pragma once

#include <optional>

#include "nilgen/phi.hpp"
#include "nilgen/profile.hpp"

namespace nilgen {

// Sufficient sample counts for generating a finite nilpotent group with
// failure probability at most epsilon, plus the exact minimum and the
// log|G| comparator. All ceiling-log arithmetic is exact; no floats.
struct BoundReport {
    Rational epsilon;
    long rank_bound_k = 0;
    long len_bound_k = 0;
    std::optional<long> pak_bound_k;  // needs |G|; absent for abstract profiles
    std::optional<long> exact_min_k;
    Rational phi_at_rank_bound;
    Rational phi_at_len_bound;
};

// rank(G) + ceil(log2(2/eps)). Guarantees phi_k >= 1 - eps.
long rank_bound(long rank, const Rational& epsilon);

// len(G) + ceil(log2(1/eps)). Guarantees phi_k >= 1 - eps.
long len_bound(long len, const Rational& epsilon);

// ceil(log2|G| + 2 + log2(1/eps)), the previously known requirement,
// evaluated as ceil_log2 of the exact rational 4*|G|/eps.
long pak_bound(const Integer& group_order, const Rational& epsilon);

// Smallest k with phi_profile(profile, k) >= 1 - eps; linear scan from
// k = rank, justified by monotonicity of phi in k.
long min_k_exact(const NilpotentProfile& profile, const Rational& epsilon);

BoundReport bound_report(const NilpotentProfile& profile, const Rational& epsilon,
                         const std::optional<Integer>& group_order = std::nullopt,
                         bool with_exact_min = false);

enum class TightnessMode { len, rank };

// Witness that the sufficient bounds cannot be lowered much: on
// G = (Z_2)^n, phi at the bound reduced by 2 (len mode) or 3 (rank mode)
// falls below 1 - eps. k is clamped at 0; phi below the rank is 0.
struct TightnessWitness {
    AbelianGroup group;
    long k = 0;
    Rational phi;
    bool claim_holds = false;
};

TightnessWitness tightness_witness(TightnessMode mode, long size, const Rational& epsilon);

}  // namespace nilgen
