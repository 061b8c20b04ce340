#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stiefel {

// mpq_class keeps values canonical: lowest terms, positive denominator, 0 is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace stiefel
