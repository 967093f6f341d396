#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace packcert::exactnum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact rational from text: "144", "-0.7", "1e-12", "2.5E3",
/// "3/4". Decimal and scientific forms are converted exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1) form.
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` fractional digits. `round_up` selects
/// the rounding direction so callers can print outward-rounded bounds.
std::string to_decimal(const Rational& value, int digits, bool round_up = false);

double to_double(const Rational& value);

/// Largest multiple of 2^-bits that is <= value.
Rational floor_dyadic(const Rational& value, long bits);
/// Smallest multiple of 2^-bits that is >= value.
Rational ceil_dyadic(const Rational& value, long bits);

Rational power_of_two(long exponent);

/// Bit length of the denominator, used to decide when rounding pays off.
std::size_t denominator_bits(const Rational& value);

}  // namespace packcert::exactnum
