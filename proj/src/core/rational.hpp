#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ckcoh {

// Exact scalar type. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", "-p/q". Throws Error(Parse) on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

// Always "num/den", e.g. "-2/1". Used by the serialization formats.
std::string to_fraction_string(const Rational& q);

// "num" when the denominator is 1, else "num/den".
std::string to_short_string(const Rational& q);

}  // namespace ckcoh
