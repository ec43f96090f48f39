#pragma once

#include <stdexcept>

namespace renyi {

/// A point lies outside the domain an object is defined on.
struct OutOfDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An adaptive approximation failed to reach the requested tolerance
/// (typically a non-smooth integrand or a missed breakpoint).
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace renyi
