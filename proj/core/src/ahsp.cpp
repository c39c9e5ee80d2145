#include "nilgen/ahsp.hpp"

#include <utility>

#include "nilgen/errors.hpp"
#include "nilgen/profile.hpp"

namespace nilgen {

HspInstance HspInstance::from_generators(const AbelianGroup& g,
                                         const std::vector<Element>& hidden_generators) {
    return HspInstance{g, subgroup_from_generators(g, hidden_generators)};
}

Subgroup orthogonal_subgroup(const AbelianGroup& g, const Subgroup& h) {
    if (!(h.ambient() == g))
        throw invalid_input_error("orthogonal_subgroup: ambient group mismatch");
    const std::size_t l = g.factor_count();
    if (l == 0) return trivial_subgroup(g);

    Integer scale = 1;  // lcm of the moduli
    for (const auto& f : g.factors()) scale = lcm(scale, f.modulus);

    // t in H^perp  iff  sum_i t_i * s_i * (scale/N_i) == 0 (mod scale)
    // for every basis row s of H. Solutions are the first-l coordinates
    // of the left kernel of the stacked matrix [C ; scale*I].
    const std::size_t m = h.basis().size();
    detail::Mat stacked(l + m, detail::Row(m, Integer(0)));
    for (std::size_t i = 0; i < l; ++i) {
        const Integer weight = scale / g.factor(i).modulus;
        for (std::size_t j = 0; j < m; ++j) stacked[i][j] = h.basis()[j][i] * weight;
    }
    for (std::size_t j = 0; j < m; ++j) stacked[l + j][j] = scale;

    std::vector<Element> generators;
    for (const auto& kernel_row : detail::left_kernel(stacked)) {
        std::vector<Integer> coords(kernel_row.begin(),
                                    kernel_row.begin() + static_cast<std::ptrdiff_t>(l));
        generators.push_back(element_from_coords(g, std::move(coords)));
    }
    return subgroup_from_generators(g, generators);
}

Element sample_hperp(const AbelianGroup& g, const Subgroup& h, Rng& rng) {
    return sample_subgroup_uniform(orthogonal_subgroup(g, h), rng);
}

Subgroup recover_subgroup(const AbelianGroup& g, const std::vector<Element>& samples) {
    return orthogonal_subgroup(g, subgroup_from_generators(g, samples));
}

IterationPlan plan_iterations(const AbelianGroup& g, const Rational& epsilon,
                              std::optional<long> hidden_len, PlanStrategy strategy) {
    if (sgn(epsilon) <= 0 || epsilon >= 1)
        throw invalid_input_error("epsilon must satisfy 0 < epsilon < 1");
    IterationPlan plan;
    plan.strategy = strategy;
    plan.epsilon = epsilon;
    switch (strategy) {
        case PlanStrategy::rank:
            plan.k = rank(g) + ceil_log2(2 / epsilon);
            break;
        case PlanStrategy::len: {
            if (!hidden_len)
                throw invalid_input_error("len strategy requires the hidden subgroup's length");
            if (*hidden_len < 0 || *hidden_len > len(g))
                throw invalid_input_error("hidden subgroup length out of range");
            plan.k = len(g) - *hidden_len + ceil_log2(1 / epsilon);
            break;
        }
        case PlanStrategy::len_unknown_h:
            plan.k = len(g) + ceil_log2(1 / epsilon);
            break;
    }
    return plan;
}

SimulationResult simulate_ahsp(const AbelianGroup& g, const Subgroup& h, long k,
                               long trials, std::uint64_t seed,
                               std::optional<IterationPlan> plan) {
    if (!(h.ambient() == g))
        throw invalid_input_error("simulate_ahsp: ambient group mismatch");
    if (k < 0) throw invalid_input_error("simulate_ahsp: negative k");
    if (trials < 1) throw invalid_input_error("simulate_ahsp: trials must be >= 1");

    const Subgroup hperp = orthogonal_subgroup(g, h);
    std::vector<Integer> moduli;
    for (const auto& f : g.factors()) moduli.push_back(f.modulus);
    // The span of samples can only grow inside H^perp, so the recovered
    // subgroup equals H exactly when the span's index matches H^perp's;
    // after that point further samples cannot change the outcome.
    Integer target_index = 1;
    for (std::size_t i = 0; i < hperp.basis().size(); ++i) target_index *= hperp.basis()[i][i];

    Integer successes = 0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        detail::TriangularLattice span(moduli);
        bool recovered = span.diagonal_product() == target_index;
        for (long j = 0; j < k && !recovered; ++j) {
            span.insert(sample_subgroup_uniform(hperp, rng).coords);
            recovered = span.diagonal_product() == target_index;
        }
        if (recovered) ++successes;
    }

    SimulationResult out;
    out.trials = trials;
    out.successes = successes;
    out.point_estimate = make_rational(successes, trials);
    out.confidence_halfwidth = normal99_halfwidth(successes, Integer(trials));
    out.seed = seed;
    out.k = k;
    out.plan = std::move(plan);
    return out;
}

SimulationResult simulate_ahsp(const AbelianGroup& g, const Subgroup& h,
                               const IterationPlan& plan, long trials, std::uint64_t seed) {
    return simulate_ahsp(g, h, plan.k, trials, seed, plan);
}

long regev_repetitions(long rank) {
    if (rank < 0) throw invalid_input_error("regev_repetitions: negative rank");
    return rank + 2;
}

}  // namespace nilgen
