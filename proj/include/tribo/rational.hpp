#pragma once

// Exact rational arithmetic used by every sequence and orbit computation.
//
// Values are GMP rationals kept in canonical form (lowest terms, positive
// denominator). Serialization is lossless: to_string() emits "p/q" (or "p"
// for integers) and parse_rational() reads it back to the identical value.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tribo {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-1.25" or "3e-2".
/// Decimals are converted exactly using a power-of-ten denominator.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical integer-ratio string: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Always "p/q", including "p/1" for integers.
std::string to_ratio_string(const Rational& value);

double to_double(const Rational& value);

/// Decimal rendering with `significant_digits` significant digits.
std::string to_decimal(const Rational& value, int significant_digits);
std::string to_decimal(double value, int significant_digits);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace tribo
