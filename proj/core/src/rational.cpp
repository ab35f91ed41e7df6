#include "voacal/rational.hpp"

#include "voacal/errors.hpp"

#include <cctype>

namespace voacal {

Rational binomial(const Rational& alpha, long k) {
    if (k < 0)
        return 0;
    Rational acc = 1;
    Rational factor = alpha;
    for (long i = 1; i <= k; ++i) {
        acc *= factor;
        acc /= i;
        factor -= 1;
    }
    return acc;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0)
        return 1;
    if (base == 0) {
        if (e < 0)
            throw DivisionByZero();
        return 0;
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc = 1;
    while (n > 0) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw ParseError("empty rational literal");
    std::string s(text.substr(begin, end - begin + 1));
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  ((c == '-' || c == '+') && i == 0);
        if (!ok)
            throw ParseError("bad rational literal: '" + s + "'");
    }
    try {
        Rational r(s);
        if (r.get_den() == 0)
            throw DivisionByZero();
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + s + "'");
    }
}

} // namespace voacal
