#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zred {

/// Unbounded signed integer used for every coefficient, quotient and Pell value.
using Integer = boost::multiprecision::cpp_int;

/// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Seeing one is a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Floor of the exact square root. Requires n >= 0.
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Division rounding toward negative infinity. Requires d != 0.
Integer floor_div(const Integer& n, const Integer& d);
Integer ceil_div(const Integer& n, const Integer& d);

Integer gcd(const Integer& a, const Integer& b);

/// Parses an optionally signed decimal integer; throws DomainError on anything else.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);

}  // namespace zred
