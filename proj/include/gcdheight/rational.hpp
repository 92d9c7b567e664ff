#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gcdheight {

/// Exact rational. mpq_class keeps values canonical after every arithmetic
/// operation (lowest terms, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

/// "p" or "p/q".
std::string to_string(const Rat& q);
std::string to_string(const BigInt& z);

BigInt binomial(long top, long bottom);

/// Natural log of |z| for z != 0, accurate for values far beyond double range.
double log_abs(const BigInt& z);

/// %.12g with a trailing ".0" when the value prints as an integer.
std::string format_real(double x);

}  // namespace gcdheight
