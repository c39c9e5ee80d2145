#pragma once

#include <stdexcept>
#include <string>

namespace nilgen {

// Raised when an argument violates a documented precondition
// (bad divisor, epsilon out of range, mismatched ambient group, ...).
struct invalid_input_error : std::invalid_argument {
    explicit invalid_input_error(const std::string& msg)
        : std::invalid_argument(msg) {}
};

// Raised when a computation would exceed a configured size cap
// (element enumeration, brute-force tuple counting).
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

}  // namespace nilgen
