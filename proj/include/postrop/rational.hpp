#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace postrop {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", "-p/q" (whitespace not allowed). Throws InputError.
Rational parse_rational(const std::string& s);

Integer lcm_of_denominators(const std::vector<Rational>& values);

}  // namespace postrop
