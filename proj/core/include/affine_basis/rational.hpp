#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affine_basis {

// Exact rational scalar used for every coefficient in the toolkit.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace affine_basis
