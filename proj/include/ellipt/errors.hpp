#pragma once

#include <stdexcept>
#include <string>

namespace ellipt {

/// Argument outside the domain of an operation (e.g. K(m) requested on the cut).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Denominator of a ratio function vanishes at the requested point.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An iteration hit its cap without meeting its stopping criterion.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ellipt
