#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace altcat {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
// Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Exact square root when value is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

// floor(value^(1/k)) for value >= 0, k >= 1.
Integer integer_root(const Integer& value, unsigned long k);

// Decimal expansion of value^(1/k) truncated to `digits` fractional digits,
// computed with integer root extraction only.
std::string root_decimal(const Integer& value, unsigned long k, unsigned digits);

}  // namespace altcat
