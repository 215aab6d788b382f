#pragma once

#include <stdexcept>
#include <string>

namespace catalan {

/// Input outside an operation's mathematical domain (p = q, n = 0, p <= 200 for
/// the class-number bound, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An interval comparison stayed ambiguous up to the precision cap.
class InconclusivePrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check failed: two algorithms disagreed or an exact division left a
/// remainder. Always indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace catalan
