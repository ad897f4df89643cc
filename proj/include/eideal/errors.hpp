#ifndef EIDEAL_ERRORS_HPP
#define EIDEAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eideal {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different variable counts.
struct DimensionError : Error {
    using Error::Error;
};

// Exponent arithmetic left the supported range.
struct OverflowError : Error {
    using Error::Error;
};

// A configured cap (lattice size, basis size, vertex count, ...) was hit.
// The message names the cap and its value.
struct ResourceError : Error {
    using Error::Error;
};

// A precondition on an argument was violated.
struct ArgumentError : Error {
    using Error::Error;
};

// Input text could not be parsed. `position` is a 1-based line number for
// line-oriented formats and a 0-based byte offset for graph6.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg), position(pos) {}
};

// unique_cycle() was asked about a graph with two or more independent cycles.
struct NotUnicyclicError : ArgumentError {
    using ArgumentError::ArgumentError;
};

}  // namespace eideal

#endif
