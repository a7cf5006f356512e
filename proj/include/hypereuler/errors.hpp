#pragma once

#include <stdexcept>
#include <string>

namespace hypereuler {

/// Parameters outside the domain of a series or operation (divergent series,
/// negative indices, malformed configuration).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The series converges but the closed-form route would need zeta(1) or a
/// divergent Euler sum somewhere in its expansion.
class NotReducibleByThisRoute : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NonConvergent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The oracle could not push its tail bound below target within max_terms.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A transcribed formula disagrees with the oracle beyond tolerance.
class FormulaAuditFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hypereuler
