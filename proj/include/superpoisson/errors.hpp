#ifndef SUPERPOISSON_ERRORS_HPP
#define SUPERPOISSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poisson {

// Base for every error raised by the library. The CLI maps the whole
// hierarchy to exit code 2 (input error); identity check failures are
// reported through IdentityReport, never through exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: dimension mismatches, out-of-range indices,
// non-homogeneous elements where homogeneity is required, ...
class InputError : public Error {
public:
    using Error::Error;
};

// Structure constant landing in the wrong graded component.
class GradingError : public InputError {
public:
    using InputError::InputError;
};

// Division by zero.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// Malformed input text (rational literals, algebra files).
class ParseError : public InputError {
public:
    using InputError::InputError;
};

} // namespace poisson

#endif
