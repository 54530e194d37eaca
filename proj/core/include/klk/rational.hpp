#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace klk {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Canonical text form is always "a/b", including integers ("4/1").
std::string to_string(const Rational& q);
// Accepts "a", "-a" or "a/b". Throws ParseError.
Rational parse_rational(std::string_view text);

Integer factorial(long n);
// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
// top*(top-1)*...*(top-k+1)/k!, any rational top.
Rational gen_binomial(const Rational& top, long k);
Rational power(const Rational& base, long exponent);

bool is_integer(const Rational& q);
long to_long(const Rational& q);

}  // namespace klk
