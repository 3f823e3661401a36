#ifndef EQUILOCAL_ERRORS_HPP
#define EQUILOCAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equilocal {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live over different ambient ranks k (or incompatible n).
class DimensionError : public Error {
public:
    using Error::Error;
};

// Rank above 16 or a per-variable exponent above the 2^16 cap.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Malformed text: polynomial/fraction syntax or the fixed-data file format.
class ParseError : public Error {
public:
    using Error::Error;
};

// An argument outside an operation's domain (zero divisor, singular
// matrix, gap property of 0, even binomial in a B_r/D_r request, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Fixed data that cannot be used by the requested operation: failed
// invariants, missing characteristic-number tables, positive-dimensional
// components where isolated points are required, unsupported table
// propagation.
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace equilocal

#endif
