#pragma once

#include <stdexcept>
#include <string>

namespace twistor {

// Input outside the mathematical domain of an operation (zero quaternion,
// point outside the unit ball, non-orthonormal frame, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A declared immersion turned out rank-deficient at an evaluation point.
struct ImmersionError : std::runtime_error {
    explicit ImmersionError(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition was violated (uncertified curve,
// non-conformal point passed to the lift, non-member group matrix, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace twistor
