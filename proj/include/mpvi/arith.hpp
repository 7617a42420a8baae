#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mpvi {

using Integer = mpz_class;
using Rational = mpq_class;

// Generalized binomial x(x-1)...(x-m+1)/m! for m >= 0, and 0 for m < 0.
// Negative upper arguments are allowed, e.g. binomial(-1, m) = (-1)^m.
Integer binomial(long upper, long lower);
Rational binomial(const Rational& upper, long lower);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

// Parses "[sign]digits[/digits]" exactly; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

long to_long(const Integer& value);

}  // namespace mpvi
