#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace easyspace {

/// Arbitrary-precision rational. gmpxx keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation; parse_rational() enforces
/// the same on input.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" and "p/q" (q != 0). Result is canonicalized.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

double to_double(const Rational& value);

} // namespace easyspace
