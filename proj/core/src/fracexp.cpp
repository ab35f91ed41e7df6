#include "voacal/fracexp.hpp"

#include "voacal/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace voacal {

Frac::Frac(std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw DivisionByZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
}

Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
}

Frac operator*(const Frac& a, const Frac& b) { return Frac(a.num * b.num, a.den * b.den); }

std::int64_t Frac::scaled_num(std::int64_t d) const {
    if (d % den != 0)
        throw std::logic_error("Frac::scaled_num: denominator " + std::to_string(den) +
                               " does not divide " + std::to_string(d));
    return num * (d / den);
}

std::string Frac::str() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Frac parse_frac(std::string_view text) {
    Rational r = parse_rational(text);
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw ParseError("exponent out of range: '" + std::string(text) + "'");
    return Frac(r.get_num().get_si(), r.get_den().get_si());
}

} // namespace voacal
