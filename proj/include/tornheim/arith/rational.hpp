#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tornheim {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// Integer power; negative exponents invert (throws on 0^-n).
Rational pow(const Rational& base, long exponent);

std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Fractional part in [0,1).
Rational mod_one(const Rational& q);

}  // namespace tornheim
