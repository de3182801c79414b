#ifndef CONELAB_ERRORS_HPP
#define CONELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace conelab {

// Operands live in different rings (or a substitution target is missing a name).
struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A precondition on the mathematical input was violated (zero divisor,
// constant polynomial where a nonconstant one is required, missing parameter).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configurable resource cap was exceeded.  Deliberately distinct from any
// verdict: a truncated computation must never look like an answer.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (e.g. a containment that is provably
// impossible was observed).  Indicates a bug, not bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

} // namespace conelab

#endif
