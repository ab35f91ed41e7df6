#include "voacal/cyclotomic.hpp"

#include "voacal/errors.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace voacal {

namespace {

using Poly = std::vector<Rational>; // little-endian, no trailing zeros

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    strip(r);
    return r;
}

// Remainder of a modulo monic m.
Poly rem(Poly a, const Poly& m) {
    strip(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] -= lead * m[i];
        a.pop_back();
        strip(a);
        if (a.size() <= dm)
            break;
    }
    return a;
}

// Exact quotient a / b (b divides a).
Poly divide_exact(Poly a, const Poly& b) {
    strip(a);
    if (a.empty() || a.size() < b.size())
        return {};
    Poly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        strip(a);
    }
    return q;
}

// Extended Euclid: returns s with s*a = gcd(a, m) (mod m), gcd normalized to 1.
Poly invert_mod(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = a;
    Poly s0 = {}, s1 = {Rational(1)};
    strip(r1);
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
        Poly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            size_t shift = r2.size() - r1.size();
            Rational f = r2.back() / r1.back();
            q[shift] += f;
            for (size_t i = 0; i < r1.size(); ++i)
                r2[shift + i] -= f * r1[i];
            strip(r2);
        }
        strip(q);
        Poly s2 = s0; // s2 = s0 - q*s1
        Poly qs1 = mul(q, s1);
        if (s2.size() < qs1.size())
            s2.resize(qs1.size(), Rational(0));
        for (size_t i = 0; i < qs1.size(); ++i)
            s2[i] -= qs1[i];
        strip(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd (a unit, since Phi_N is irreducible and a != 0)
    if (r0.size() != 1)
        throw Error("cyclotomic inverse: gcd not a unit");
    Rational g = r0[0];
    for (auto& c : s0)
        c /= g;
    return rem(std::move(s0), m);
}

} // namespace

long euler_phi(long N) {
    long result = N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

const std::vector<Rational>& cyclotomic_polynomial(long N) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(N);
    if (it != cache.end())
        return it->second;

    // x^N - 1 = prod_{d | N} Phi_d, so divide out all proper divisors.
    std::function<const Poly&(long)> get = [&](long n) -> const Poly& {
        auto found = cache.find(n);
        if (found != cache.end())
            return found->second;
        Poly p(n + 1, Rational(0));
        p[0] = -1;
        p[n] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0)
                p = divide_exact(std::move(p), get(d));
        return cache.emplace(n, std::move(p)).first->second;
    };
    return get(N);
}

void Cyc::canonicalize() {
    size_t deg = static_cast<size_t>(euler_phi(order_));
    c_.resize(deg, Rational(0));
    if (order_ == 1)
        return;
    bool rational_only = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) {
            rational_only = false;
            break;
        }
    if (rational_only) {
        c_.resize(1);
        order_ = 1;
    }
}

Cyc Cyc::root(long order, long j) {
    if (order < 1)
        throw Error("cyc root: order must be positive");
    j %= order;
    if (j < 0)
        j += order;
    Cyc r;
    r.order_ = order;
    std::vector<Rational> p(static_cast<size_t>(j) + 1, Rational(0));
    p[static_cast<size_t>(j)] = 1;
    p = rem(std::move(p), cyclotomic_polynomial(order));
    r.c_ = std::move(p);
    r.canonicalize();
    return r;
}

bool Cyc::is_zero() const {
    for (const auto& c : c_)
        if (c != 0)
            return false;
    return true;
}

Cyc Cyc::embedded(long L) const {
    if (L == order_)
        return *this;
    if (L % order_ != 0)
        throw Error("cyclotomic embed: order does not divide target");
    long stride = L / order_;
    std::vector<Rational> p;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        size_t e = i * static_cast<size_t>(stride);
        if (p.size() <= e)
            p.resize(e + 1, Rational(0));
        p[e] += c_[i];
    }
    if (p.empty())
        p.push_back(Rational(0));
    Cyc r;
    r.order_ = L;
    r.c_ = rem(std::move(p), cyclotomic_polynomial(L));
    r.canonicalize();
    return r;
}

void Cyc::promote(Cyc& a, Cyc& b) {
    if (a.order_ == b.order_)
        return;
    long L = std::lcm(a.order_, b.order_);
    a = a.embedded(L);
    b = b.embedded(L);
}

Cyc& Cyc::operator+=(const Cyc& o) {
    if (order_ == o.order_) {
        for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        canonicalize();
        return *this;
    }
    Cyc b = o;
    promote(*this, b);
    return *this += b;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    if (order_ == o.order_) {
        for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        canonicalize();
        return *this;
    }
    Cyc b = o;
    promote(*this, b);
    return *this -= b;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    if (order_ == 1 && o.order_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (o.order_ == 1) { // scalar by rational
        for (auto& c : c_)
            c *= o.c_[0];
        canonicalize();
        return *this;
    }
    if (order_ == 1) {
        Rational s = c_[0];
        *this = o;
        for (auto& c : c_)
            c *= s;
        canonicalize();
        return *this;
    }
    Cyc b = o;
    promote(*this, b);
    Poly prod = mul(c_, b.c_);
    c_ = rem(std::move(prod), cyclotomic_polynomial(order_));
    canonicalize();
    return *this;
}

Cyc Cyc::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    if (order_ == 1)
        return Cyc(Rational(1) / c_[0]);
    Cyc r;
    r.order_ = order_;
    r.c_ = invert_mod(c_, cyclotomic_polynomial(order_));
    r.canonicalize();
    return r;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Cyc Cyc::pow(std::int64_t e) const {
    if (e == 0)
        return Cyc(1);
    Cyc base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Cyc acc(1);
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const Cyc& a, const Cyc& b) {
    if (a.order_ == b.order_)
        return a.c_ == b.c_;
    Cyc x = a, y = b;
    Cyc::promote(x, y);
    return x.c_ == y.c_;
}

std::string Cyc::str() const {
    std::string out;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        const Rational& coef = c_[k];
        if (coef == 0)
            continue;
        Rational mag = coef < 0 ? Rational(-coef) : coef;
        if (first) {
            if (coef < 0)
                out += "-";
            first = false;
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (!unit)
                out += to_string(mag) + "*";
            out += "w";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    if (first)
        out = "0";
    return out;
}

namespace {

struct CycParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Rational number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos)
            throw ParseError("expected number in cyclotomic literal");
        return parse_rational(s.substr(start, pos - start));
    }

    // term := rational | [rational '*'] 'w' ['^' int]
    std::pair<Rational, long> term() {
        Rational coef = 1;
        long deg = 0;
        if (peek() != 'w') {
            coef = number();
            skip_ws();
            if (pos < s.size() && s[pos] == '*')
                ++pos;
        }
        if (peek() == 'w') {
            ++pos;
            deg = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip_ws();
                bool neg = false;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    neg = s[pos] == '-';
                    ++pos;
                }
                Rational d = number();
                if (!is_integer(d))
                    throw ParseError("w exponent must be an integer");
                deg = static_cast<long>(d.get_num().get_si());
                if (neg)
                    throw ParseError("negative powers of w are not part of the grammar");
            }
        }
        return {coef, deg};
    }
};

} // namespace

Cyc parse_cyc(std::string_view text, long order) {
    CycParser p{text};
    std::vector<std::pair<Rational, long>> terms;
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        auto [coef, deg] = p.term();
        terms.emplace_back(sign * coef, deg);
        if (p.eof())
            break;
        char c = p.peek();
        if (c == '+')
            sign = 1;
        else if (c == '-')
            sign = -1;
        else
            throw ParseError("unexpected character in cyclotomic literal");
        ++p.pos;
    }
    Cyc result;
    for (auto& [c, d] : terms)
        result += Cyc(c) * Cyc::root(order, 1).pow(d);
    return result;
}

} // namespace voacal
