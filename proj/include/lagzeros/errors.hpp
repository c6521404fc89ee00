#pragma once

#include <stdexcept>
#include <string>

namespace lagzeros {

/// Argument outside the domain of an operation (alpha <= -1, negative degree, non-finite x).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A theorem checker was asked to run outside the hypotheses of its statement.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The tridiagonal eigenvalue iteration did not converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lagzeros
