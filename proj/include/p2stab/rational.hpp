#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace p2stab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Whitespace is not
/// accepted. Throws Error(invalid_input) on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Comma-separated list of rationals, e.g. "1,1,-3/2".
std::vector<Rational> parse_rational_list(std::string_view text);

bool is_integer(const Rational& q);

/// Throws when q is not an integer; returns it as a machine integer.
std::int64_t to_int64(const Rational& q);

int sign(const Rational& q);

Rational from_int(std::int64_t v);

/// num/den in canonical form; den must be nonzero.
Rational make_rational(long num, long den);

/// Exact square root when q is the square of a rational, else false.
bool rational_sqrt(const Rational& q, Rational& root);

double to_double(const Rational& q);

Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace p2stab
