#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sphspec {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical reduced fraction p/q.
Rational Q(long p, long q = 1);

// "p/q" with q > 0 and gcd 1; plain "p" when q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& r);
bool is_half_odd(const Rational& r);  // r in Z + 1/2
std::int64_t to_int64(const Rational& r);  // throws unless integral and in range
std::int64_t to_int64(const Integer& z);

std::string to_string(const std::vector<Rational>& v);  // "(a, b, ...)"

}  // namespace sphspec
