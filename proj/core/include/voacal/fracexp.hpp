#pragma once

#include "voacal/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace voacal {

/// Reduced fraction with small components, used for exponents in (1/N)Z
/// and for Heisenberg mode indices. Exponents stay tiny (window bounds,
/// weights), so machine integers suffice; overflow would need |num| or
/// den beyond 2^62, far outside every reachable input.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1; // > 0, gcd(|num|, den) = 1

    constexpr Frac() = default;
    Frac(std::int64_t n, std::int64_t d = 1);

    friend Frac operator+(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a, const Frac& b);
    friend Frac operator*(const Frac& a, const Frac& b);
    friend Frac operator-(const Frac& a) { return {-a.num, a.den, unchecked{}}; }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }

    friend bool operator==(const Frac& a, const Frac& b) = default;
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        // cross-multiply; magnitudes small enough that this cannot overflow
        return a.num * b.den <=> b.num * a.den;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    /// Numerator after rescaling to denominator d; requires den | d.
    std::int64_t scaled_num(std::int64_t d) const;

    Rational to_rational() const { return make_rational(num, den); }

    /// "p" or "p/q".
    std::string str() const;

  private:
    struct unchecked {};
    constexpr Frac(std::int64_t n, std::int64_t d, unchecked) : num(n), den(d) {}
};

Frac parse_frac(std::string_view text);

inline Frac frac(std::int64_t n, std::int64_t d = 1) { return Frac(n, d); }

} // namespace voacal
