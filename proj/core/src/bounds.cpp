#include "nilgen/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilgen/errors.hpp"

namespace nilgen {

namespace {

void check_epsilon(const Rational& epsilon) {
    if (sgn(epsilon) <= 0 || epsilon >= 1)
        throw invalid_input_error("epsilon must satisfy 0 < epsilon < 1");
}

}  // namespace

long rank_bound(long rank, const Rational& epsilon) {
    if (rank < 0) throw invalid_input_error("rank_bound: negative rank");
    check_epsilon(epsilon);
    return rank + ceil_log2(2 / epsilon);
}

long len_bound(long len, const Rational& epsilon) {
    if (len < 0) throw invalid_input_error("len_bound: negative len");
    check_epsilon(epsilon);
    return len + ceil_log2(1 / epsilon);
}

long pak_bound(const Integer& group_order, const Rational& epsilon) {
    if (group_order < 1) throw invalid_input_error("pak_bound: order must be >= 1");
    check_epsilon(epsilon);
    return ceil_log2(Rational(4) * Rational(group_order) / epsilon);
}

long min_k_exact(const NilpotentProfile& profile, const Rational& epsilon) {
    check_epsilon(epsilon);
    const Rational target = 1 - epsilon;
    for (long k = profile.rank();; ++k) {
        if (phi_profile(profile, k).value >= target) return k;
    }
}

BoundReport bound_report(const NilpotentProfile& profile, const Rational& epsilon,
                         const std::optional<Integer>& group_order, bool with_exact_min) {
    check_epsilon(epsilon);
    BoundReport report;
    report.epsilon = epsilon;
    report.rank_bound_k = rank_bound(profile.rank(), epsilon);
    report.len_bound_k = len_bound(profile.len(), epsilon);
    report.phi_at_rank_bound = phi_profile(profile, report.rank_bound_k).value;
    report.phi_at_len_bound = phi_profile(profile, report.len_bound_k).value;
    const Rational target = 1 - epsilon;
    if (report.phi_at_rank_bound < target || report.phi_at_len_bound < target)
        throw std::logic_error("sufficient bound failed its guarantee");
    if (group_order) report.pak_bound_k = pak_bound(*group_order, epsilon);
    if (with_exact_min) report.exact_min_k = min_k_exact(profile, epsilon);
    return report;
}

TightnessWitness tightness_witness(TightnessMode mode, long size, const Rational& epsilon) {
    if (size < 1) throw invalid_input_error("tightness_witness: size must be >= 1");
    check_epsilon(epsilon);
    // (Z_2)^size has rank = len = size.
    std::vector<Integer> divisors(static_cast<std::size_t>(size), Integer(2));
    TightnessWitness w;
    w.group = parse_group(divisors);
    const long reduced = mode == TightnessMode::len
                             ? size + ceil_log2(1 / epsilon) - 2
                             : size + ceil_log2(2 / epsilon) - 3;
    w.k = std::max(0L, reduced);
    w.phi = phi_abelian(w.group, w.k).value;
    w.claim_holds = w.phi < 1 - epsilon;
    return w;
}

}  // namespace nilgen
