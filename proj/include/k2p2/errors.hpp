#pragma once

#include <stdexcept>
#include <string>

namespace k2p2 {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |omega| below tolerance (the space is undefined for omega = 0).
struct OmegaZeroError : Error {
    using Error::Error;
};

// |cos(omega)| below the singular tolerance; the boundary closed forms
// divide by cos(omega).
struct OmegaSingularError : Error {
    using Error::Error;
};

// Interval count N < 1, or a sample file with fewer than two rows.
struct BadNError : Error {
    using Error::Error;
};

// Discrete-operator constants failed their validity checks at working
// precision (real reciprocal root pair with |lambda| < 1).
struct NumericallyDegenerateError : Error {
    using Error::Error;
};

// The 2x2 boundary system of the closed form has a vanishing determinant.
struct SingularBoundarySystemError : Error {
    using Error::Error;
};

// Dense elimination hit a pivot below the singularity threshold.
struct SingularSystemError : Error {
    using Error::Error;
};

// Coefficient vector and sample vector differ in length.
struct LengthMismatchError : Error {
    using Error::Error;
};

// A sample file could not be parsed; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& what, int line_number)
        : Error(what + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}

    int line;
};

// Sample-file abscissae deviate from the equally spaced nodes beta/N.
struct NodeMismatchError : Error {
    using Error::Error;
};

}  // namespace k2p2
