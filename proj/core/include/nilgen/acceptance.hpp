#pragma once

#include <string>
#include <vector>

#include "nilgen/group.hpp"
#include "nilgen/profile.hpp"
#include "nilgen/random.hpp"

namespace nilgen::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The seven reproduction checks behind `nilgen repro` and the
// acceptance test binary. Each is deterministic: every randomized
// family is derived from a fixed seed baked in here.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

std::string format_result_line(const CriterionResult& r);

// Shared fixture generators (deterministic given the rng stream).
std::vector<AbelianGroup> all_abelian_groups_up_to(long max_order);
NilpotentProfile random_profile(Rng& rng, long max_rank, long max_len);
AbelianGroup random_group(Rng& rng, const Integer& max_order);

}  // namespace nilgen::acceptance
