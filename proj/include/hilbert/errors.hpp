#ifndef HILBERT_ERRORS_HPP
#define HILBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbert {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad family index, order, or query argument.
struct DomainError : Error {
    using Error::Error;
};

/// A quadrant rule whose image is not exactly one quadrant of the unit
/// square (malformed fixture).
struct InvalidRuleError : Error {
    using Error::Error;
};

/// Two consecutive quadrant sub-curves do not meet in edge-adjacent cells.
struct BrokenConnectivityError : Error {
    BrokenConnectivityError(int from_quadrant, int to_quadrant, const std::string& what)
        : Error(what), from_quadrant(from_quadrant), to_quadrant(to_quadrant) {}

    int from_quadrant;
    int to_quadrant;
};

/// A move word walks outside the grid.
struct OutOfBoundsError : Error {
    using Error::Error;
};

/// A move word revisits a cell.
struct SelfIntersectionError : Error {
    using Error::Error;
};

/// Word length does not match 4^n - 1.
struct WordLengthError : Error {
    using Error::Error;
};

/// Request exceeds a resource guard (order or search-space cap).
struct ResourceError : Error {
    using Error::Error;
};

/// Filesystem failure while writing output.
struct IoError : Error {
    using Error::Error;
};

}  // namespace hilbert

#endif
