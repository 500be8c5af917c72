#pragma once

#include <stdexcept>
#include <string>

namespace cowpath {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructor or operation received an argument outside its domain.
struct InvalidParameterError : Error {
    using Error::Error;
};

/// A strategy failed validity checks (x_i > 0, x_{i+2} > x_i).
struct InvalidStrategyError : Error {
    using Error::Error;
};

/// A finite explicit strategy was asked for segments past its prefix,
/// or a query lies beyond the length it can ever cover.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// Text input (rational literal, strategy file) failed to parse.
struct ParseError : Error {
    using Error::Error;
};

/// Exact division by zero.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// The LP enumeration ran out of programs before finding a feasible one.
struct OracleHorizonError : Error {
    using Error::Error;
};

} // namespace cowpath
