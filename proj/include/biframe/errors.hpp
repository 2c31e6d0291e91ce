#ifndef BIFRAME_ERRORS_HPP
#define BIFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biframe {

// Error taxonomy used across the library. Callers that need to distinguish
// failure modes catch the concrete type; everything derives from Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violations (bad sizes, non-positive weights, out-of-range knobs).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Dimension / space mismatches between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Operator is numerically singular (condition number above 1/tol).
class SingularOperator : public Error {
public:
    using Error::Error;
};

// Input fails the Hermitian-ness gate of an eigensolver call.
class NotHermitian : public Error {
public:
    using Error::Error;
};

// Document cannot be parsed at all.
class FormatError : public Error {
public:
    using Error::Error;
};

// Document parses but violates a schema invariant; message names the field.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace biframe

#endif
