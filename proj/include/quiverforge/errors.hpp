#ifndef QUIVERFORGE_ERRORS_HPP
#define QUIVERFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quiverforge {

// Malformed documents or identifiers at the library boundary (CLI exit 1).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold for the given value
// (CLI exit 2).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural guarantee the library verifies as it computes failed to hold.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace quiverforge

#endif
