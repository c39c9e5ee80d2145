#include "nilgen/phi.hpp"

#include <vector>

#include "nilgen/errors.hpp"
#include "nilgen/factor.hpp"
#include "nilgen/lattice.hpp"
#include "nilgen/subgroup.hpp"

namespace nilgen {

Rational phi_p_rank(const Integer& p, long r, long k) {
    if (!is_probable_prime(p))
        throw invalid_input_error("phi_p_rank: " + p.get_str() + " is not prime");
    if (r < 0 || k < 0) throw invalid_input_error("phi_p_rank: negative rank or k");
    if (r == 0) return Rational(1);
    if (k < r) return Rational(0);
    Rational out(1);
    for (long i = 0; i < r; ++i) {
        const Integer q = ipow(p, static_cast<unsigned long>(k - i));
        out *= make_rational(q - 1, q);
    }
    return out;
}

PhiValue phi_profile(const NilpotentProfile& profile, long k) {
    Rational value(1);
    for (const auto& e : profile.entries()) {
        value *= phi_p_rank(e.prime, e.rank, k);
        if (sgn(value) == 0) break;
    }
    return PhiValue{k, value, profile};
}

PhiValue phi_abelian(const AbelianGroup& g, long k) {
    return phi_profile(sylow_profile(g), k);
}

namespace {

std::vector<Integer> moduli_of(const AbelianGroup& g) {
    std::vector<Integer> out;
    for (const auto& f : g.factors()) out.push_back(f.modulus);
    return out;
}

Integer count_rec(const AbelianGroup& g, const std::vector<Element>& elements, long k,
                  long depth, const detail::TriangularLattice& span, const Integer& span_index) {
    // span_index == 1 means the prefix already spans G.
    if (span_index == 1) return ipow(g.order(), static_cast<unsigned long>(k - depth));
    if (depth == k) return Integer(0);
    Integer total = 0;
    for (const Element& e : elements) {
        detail::TriangularLattice extended = span;
        extended.insert(e.coords);
        total += count_rec(g, elements, k, depth + 1, extended, extended.diagonal_product());
    }
    return total;
}

}  // namespace

Integer count_generating_tuples(const AbelianGroup& g, long k, const Integer& cap) {
    if (k < 0) throw invalid_input_error("count_generating_tuples: negative k");
    Integer work = ipow(g.order(), static_cast<unsigned long>(k));
    if (work > cap)
        throw resource_limit_error("tuple count cap exceeded: |G|^k = " + work.get_str() +
                                   " > " + cap.get_str());
    if (k == 0) return g.is_trivial() ? Integer(1) : Integer(0);
    const std::vector<Element> elements = all_elements(g);
    detail::TriangularLattice span(moduli_of(g));
    return count_rec(g, elements, k, 0, span, span.diagonal_product());
}

MonteCarloEstimate estimate_phi(const AbelianGroup& g, long k, long trials, std::uint64_t seed) {
    if (k < 0) throw invalid_input_error("estimate_phi: negative k");
    if (trials < 1) throw invalid_input_error("estimate_phi: trials must be >= 1");
    const std::vector<Integer> moduli = moduli_of(g);
    Integer successes = 0;
    for (long t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        detail::TriangularLattice span(moduli);
        bool full = span.diagonal_product() == 1;
        for (long j = 0; j < k && !full; ++j) {
            span.insert(sample_uniform(g, rng).coords);
            full = span.diagonal_product() == 1;
        }
        if (full) ++successes;
    }
    MonteCarloEstimate out;
    out.trials = trials;
    out.successes = successes;
    out.point_estimate = make_rational(successes, trials);
    out.confidence_halfwidth = normal99_halfwidth(successes, Integer(trials));
    out.seed = seed;
    return out;
}

}  // namespace nilgen
