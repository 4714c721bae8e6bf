#pragma once

#include <gmpxx.h>

#include <string>

namespace confstab {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws std::overflow_error if q is not an integer fitting in a long.
long to_long(const Rational& q);
long to_long(const Integer& z);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace confstab
