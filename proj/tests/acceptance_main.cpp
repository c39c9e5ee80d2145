// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Same checks as `nilgen repro`.

#include <cstdio>

#include "nilgen/acceptance.hpp"

int main() {
    bool all_passed = true;
    for (int id = 1; id <= 7; ++id) {
        const auto result = nilgen::acceptance::run_criterion(id);
        std::puts(nilgen::acceptance::format_result_line(result).c_str());
        std::fflush(stdout);
        all_passed = all_passed && result.passed;
    }
    return all_passed ? 0 : 1;
}
