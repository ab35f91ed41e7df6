#pragma once

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace voacal {

/// Exact rational scalar. GMP keeps the canonical form (gcd 1, positive
/// denominator) and arbitrary-precision integer parts.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// binom(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k! for rational alpha.
Rational binomial(const Rational& alpha, long k);

/// base^e for integer e (negative e inverts; throws DivisionByZero on 0^-e).
Rational pow_rational(const Rational& base, long e);

bool is_integer(const Rational& r);

/// Renders "p/q", or just "p" when q = 1.
std::string to_string(const Rational& r);

/// Accepts the same "p/q" grammar (optional sign, optional "/q").
Rational parse_rational(std::string_view text);

} // namespace voacal
