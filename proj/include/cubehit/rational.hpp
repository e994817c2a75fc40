#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cubehit {

// Exact rational / integer types. GMP keeps mpq_class canonical (lowest
// terms, positive denominator), which is exactly the representation the
// library promises in its output formats.
using Rat = mpq_class;
using Int = mpz_class;

// C(n, k); zero when k < 0 or k > n.
Int binomial(long n, long k);

// 2^e as an exact integer.
Int pow2(unsigned long e);

// "p/q" in lowest terms; integral values print without the "/q" part.
std::string to_fraction_string(const Rat& q);

// Decimal rendering, 15 significant digits by default.
std::string to_decimal_string(const Rat& q, int significant_digits = 15);

double to_double(const Rat& q);

}  // namespace cubehit
