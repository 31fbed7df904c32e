#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace icl {

// Exact rational; canonical form (positive denominator, reduced) is kept by
// gmp after every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "a", "a/b" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);

// "num/den" (always with a denominator, e.g. "3/1").
std::string to_fraction_string(const Rational& value);

// Decimal with a fixed number of places, rounded half away from zero.
std::string to_decimal_string(const Rational& value, int places = 6);

// "num/den (decimal)" as printed by the command-line tool.
std::string describe(const Rational& value);

std::uint64_t binomial(int n, int k);

}  // namespace icl
