#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ipb {

// Arbitrary-precision integers and rationals. mpq_class keeps values reduced
// with positive denominator as long as construction goes through the helpers
// below, which is what the rest of the code relies on for syntactic equality.
using Int = mpz_class;
using Rational = mpq_class;

// Reduced rational num/den. Throws std::invalid_argument on zero denominator.
Rational make_rational(const Int& num, const Int& den);

// Accepts "p" or "p/q" (decimal, optional leading '-'), nothing else.
std::optional<Rational> parse_rat(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);

// r^e for small non-negative e.
Rational rat_pow(const Rational& r, unsigned e);

Int binomial(int n, int k);

}  // namespace ipb
