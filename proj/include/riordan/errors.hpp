#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

/// Base for every mathematical failure raised by the library.
class math_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation was called outside its domain (u0 != 0 for compose, a0 != 1 for log1, ...).
class precondition_error : public math_error {
public:
    using math_error::math_error;
};

/// A coefficient was requested beyond the known truncation order.
class truncation_error : public math_error {
public:
    using math_error::math_error;
};

/// b_from_g on a series that is not a pseudo-involution.
class no_b_sequence : public math_error {
public:
    using math_error::math_error;
};

/// Malformed textual input (rationals, coefficient lists, json).
class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace riordan
