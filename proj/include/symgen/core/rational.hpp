#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symgen {

/// Exact rational number. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses `-3`, `7/2`, `+4/6` (result is canonicalized). Throws Error on junk.
Rational parse_rational(std::string_view text);

/// `p/q` or `p` when the denominator is 1.
std::string to_string(const Rational& r);

/// Nearest double; only for display and the numerical modules.
double to_double(const Rational& r);

Rational factorial(unsigned n);

}  // namespace symgen
