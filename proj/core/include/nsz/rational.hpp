#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nsz {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form.
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_fraction(const Rational& value);

/// Accepts "p", "-p", "p/q"; throws FormatError on anything else.
Rational parse_rational(std::string_view text);

/// Fixed-point rendering rounded half away from zero.
std::string to_decimal(const Rational& value, unsigned places);

/// Exact decimal expansion with the repetend in parentheses, e.g. 2737/66 ->
/// "41.4(69)". Terminating expansions carry no parentheses.
std::string repeating_decimal(const Rational& value);

Integer factorial(unsigned n);
Integer power(const Integer& base, unsigned exponent);
Rational power(const Rational& base, unsigned exponent);
Integer isqrt(const Integer& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

/// Signed 128-bit integer used by exact integer fast paths.
__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

/// Converts when |value| fits in 126 bits; throws ParameterError otherwise.
Int128 to_int128(const Integer& value);
Integer from_int128(Int128 value);

}  // namespace nsz
