#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace sprugnoli {

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den, canonicalized. Throws std::invalid_argument for den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact square root if q is the square of a rational; the non-negative root.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace sprugnoli
