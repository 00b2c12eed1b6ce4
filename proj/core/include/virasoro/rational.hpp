#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace virasoro {

// Exact arithmetic throughout the library is big-integer/big-rational;
// overflow anywhere in a computation is a bug, not an error case.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "n" or "n/d" (lowest terms, sign on the numerator).
std::string to_string(const Rational& x);

// Parses "n" or "n/d" with an optional leading '-'. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational rational(long num, long den = 1);

// Exact square root when x is the square of a rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& x);

double to_double(const Rational& x);

// ln(x) for x > 0. Goes through mantissa/exponent decomposition, so it is
// safe for values far outside double range. Throws std::domain_error for
// x <= 0.
double log_to_double(const Rational& x);

// True when the denominator is 1.
bool is_integer(const Rational& x);

}  // namespace virasoro
