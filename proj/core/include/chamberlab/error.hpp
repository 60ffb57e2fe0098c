#pragma once

#include <stdexcept>
#include <string>

namespace chamberlab {

/// Raised when an operation's precondition on its arguments does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a desk-scale resource guard (chamber cap, adjacency cap,
/// search budget) would be exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computed value disagrees with a closed-form prediction in a
/// context where the disagreement cannot be reported as an ordinary check
/// result.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chamberlab
