#pragma once

#include "voacal/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace voacal {

/// Exact element of the cyclotomic field Q(w_N), w_N = exp(2*pi*i/N),
/// stored as a residue modulo the N-th cyclotomic polynomial in the
/// symbol w. Working modulo the cyclotomic polynomial (rather than
/// w^N - 1) makes the representation a field with canonical forms, so
/// zero-testing is exact. Order-1 elements are plain rationals and sums,
/// products etc. demote to order 1 whenever the result is rational.
class Cyc {
  public:
    Cyc() : order_(1), c_{Rational(0)} {}
    Cyc(const Rational& r) : order_(1), c_{r} {}
    Cyc(long n) : order_(1), c_{Rational(n)} {}

    /// w_N^(j mod N) in reduced canonical form.
    static Cyc root(long order, long j);

    long order() const { return order_; }
    /// Little-endian coefficients of the residue; length phi(order).
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    /// Requires is_rational().
    const Rational& rational() const { return c_[0]; }

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
    friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
    Cyc operator-() const;

    Cyc inverse() const;
    Cyc pow(std::int64_t e) const;

    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Re-expresses the element in Q(w_L); requires order | L.
    Cyc embedded(long L) const;

    /// Polynomial rendering in the symbol "w", e.g. "1/2*w^2 - 1/3".
    std::string str() const;

  private:
    long order_;
    std::vector<Rational> c_;

    void canonicalize();
    static void promote(Cyc& a, Cyc& b);
};

/// The same grammar str() produces; "w" denotes w_order.
Cyc parse_cyc(std::string_view text, long order);

/// Monic cyclotomic polynomial Phi_N, little-endian (cached, thread-safe).
const std::vector<Rational>& cyclotomic_polynomial(long N);

long euler_phi(long N);

inline bool is_zero(const Cyc& c) { return c.is_zero(); }
inline bool is_zero(const Rational& r) { return r == 0; }

} // namespace voacal
