#pragma once

#include <cstdint>
#include <optional>

#include "nilgen/phi.hpp"
#include "nilgen/subgroup.hpp"

namespace nilgen {

// An abelian hidden-subgroup instance. The oracle function is never
// materialized: the standard quantum algorithm's measurement outcome is
// uniform on the orthogonal subgroup, and the simulator samples that
// distribution directly.
struct HspInstance {
    AbelianGroup group;
    Subgroup hidden;

    static HspInstance from_generators(const AbelianGroup& g,
                                       const std::vector<Element>& hidden_generators);
};

enum class PlanStrategy { rank, len, len_unknown_h };

struct IterationPlan {
    PlanStrategy strategy = PlanStrategy::rank;
    long k = 0;
    Rational epsilon;
};

struct SimulationResult {
    Integer trials;
    Integer successes;
    Rational point_estimate;
    Rational confidence_halfwidth;
    std::uint64_t seed = 0;
    long k = 0;
    std::optional<IterationPlan> plan;
};

// H^perp = { t : sum_i t_i s_i / N_i is an integer for every s in H },
// computed exactly as the left kernel of the scaled congruence system.
// The result is relative to the ambient's canonical factor order.
Subgroup orthogonal_subgroup(const AbelianGroup& g, const Subgroup& h);

// One measurement: uniform over H^perp. Computes H^perp on every call;
// loops should hoist it and use sample_subgroup_uniform directly.
Element sample_hperp(const AbelianGroup& g, const Subgroup& h, Rng& rng);

// Candidate hidden subgroup from measured samples: the solution set of
// the congruence system, which equals (span of samples)^perp. Always
// contains H when the samples lie in H^perp.
Subgroup recover_subgroup(const AbelianGroup& g, const std::vector<Element>& samples);

// Iteration counts guaranteeing recovery probability >= 1 - epsilon:
//   rank strategy:          k = rank(G) + ceil(log2(2/eps))
//   len strategy:           k = len(G) - len(H) + ceil(log2(1/eps))
//   len, H unknown:         k = len(G) + ceil(log2(1/eps))
IterationPlan plan_iterations(const AbelianGroup& g, const Rational& epsilon,
                              std::optional<long> hidden_len, PlanStrategy strategy);

// Runs the classical post-processing end to end: per trial, k samples
// from H^perp are spanned and the trial succeeds iff the recovered
// subgroup equals H, which by orthogonal duality happens exactly when
// the span reaches all of H^perp (the check the implementation uses).
SimulationResult simulate_ahsp(const AbelianGroup& g, const Subgroup& h, long k,
                               long trials, std::uint64_t seed,
                               std::optional<IterationPlan> plan = std::nullopt);
SimulationResult simulate_ahsp(const AbelianGroup& g, const Subgroup& h,
                               const IterationPlan& plan, long trials, std::uint64_t seed);

// Uniform random elements needed to generate an abelian group with
// probability at least 1/2: rank + 2.
long regev_repetitions(long rank);

}  // namespace nilgen
