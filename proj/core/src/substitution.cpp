#include "voacal/substitution.hpp"

namespace voacal {

ScalarSeries binom_expand(int sign, const Frac& alpha, long order, Var a, Var b) {
    ScalarSeries r({a, b});
    for (long i = 0; i <= order; ++i) {
        Rational c = binomial(alpha.to_rational(), i);
        if (sign < 0 && (i & 1))
            c = -c;
        if (c == 0)
            continue;
        r.add_term({alpha - Frac(i), Frac(i)}, Cyc(c));
    }
    return r;
}

ScalarSeries base_pow(long n, const Frac& alpha, long x0_order, Var xv, Var x0v) {
    if (alpha.is_zero())
        throw MalformedBase("base_pow: alpha must be nonzero");
    std::vector<Var> vars{xv, x0v};
    ScalarSeries result(vars);
    if (n > x0_order)
        return result; // everything sits above the truncation order
    if (n == 0) {
        result.add_term({Frac(0), Frac(0)}, Cyc(1));
        return result;
    }
    long inner = x0_order - n;
    // g = x0 * f = sum_{i>=2} binom(alpha,i) x^(1-i) x0^(i-1)
    ScalarSeries g(vars);
    for (long i = 2; i - 1 <= inner; ++i) {
        Rational c = binomial(alpha.to_rational(), i);
        if (c != 0)
            g.add_term({Frac(1 - i), Frac(i - 1)}, Cyc(c));
    }
    Rational alpha_rat = alpha.to_rational();
    ScalarSeries acc(vars);
    ScalarSeries gpow(vars);
    gpow.add_term({Frac(0), Frac(0)}, Cyc(1));
    for (long i = 0; i <= inner; ++i) {
        if (i > 0)
            gpow = mul_trunc(g, gpow, x0v, Frac(inner));
        Rational c = binomial(Rational(n), i) * pow_rational(alpha_rat, n - i);
        if (c != 0)
            acc += gpow * Cyc(c);
        if (gpow.is_zero())
            break;
    }
    // prefactor x^(n(alpha-1)) x0^n
    Mono shift{(alpha - Frac(1)) * Frac(n), Frac(n)};
    return acc.shifted(shift);
}

ScalarSeries subst_x_dominant(const ScalarSeries& S, Var zvar, const Frac& alpha,
                              long x0_order, Var xv, Var x0v) {
    size_t zidx = S.index_of(zvar);
    size_t pidx = S.vars().size(); // passthrough index, if any
    for (size_t i = 0; i < S.vars().size(); ++i) {
        if (i == zidx)
            continue;
        if (S.vars()[i] != xv)
            throw Error("subst_x_dominant: extra variable in input");
        pidx = i;
    }
    ScalarSeries result({xv, x0v});
    for (const auto& [m, c] : S.terms()) {
        const Frac& zexp = m[zidx];
        if (!zexp.is_integer())
            throw MalformedBase("subst_x_dominant: z exponent must be an integer");
        ScalarSeries piece = base_pow(zexp.num, alpha, x0_order, xv, x0v);
        piece *= c;
        if (pidx < S.vars().size())
            piece = piece.shifted({m[pidx], Frac(0)});
        result += piece;
    }
    return result;
}

ScalarSeries subst_x0_dominant(const Frac& alpha, const ScalarSeries& p, long x_order) {
    size_t x0idx = p.index_of(Var::x0);
    size_t xidx = p.index_of(Var::x);
    // validate p = x0^k + x q(x0, x)
    long k = -1;
    ScalarSeries xq(p.vars());
    for (const auto& [m, c] : p.terms()) {
        const Frac& ex0 = m[x0idx];
        const Frac& ex = m[xidx];
        if (!ex0.is_integer() || ex0.num < 0 || !ex.is_integer() || ex.num < 0)
            throw MalformedBase("subst_x0_dominant: base is not a polynomial");
        if (ex.num == 0) {
            if (k >= 0)
                throw MalformedBase("subst_x0_dominant: two x-free terms");
            if (!(c == Cyc(1)) || ex0.num < 1)
                throw MalformedBase("subst_x0_dominant: leading part is not x0^k");
            k = ex0.num;
        } else {
            xq.add_term(m, c);
        }
    }
    if (k < 1)
        throw MalformedBase("subst_x0_dominant: missing pure x0^k term");

    ScalarSeries result(p.vars());
    ScalarSeries xqpow(p.vars());
    xqpow.add_term({Frac(0), Frac(0)}, Cyc(1));
    Rational alpha_rat = alpha.to_rational();
    for (long i = 0;; ++i) {
        if (i > 0) {
            xqpow = mul_trunc(xq, xqpow, Var::x, Frac(x_order));
            if (xqpow.is_zero())
                break;
        }
        // (x q)^i carries x-degree >= i, so the truncation bounds i
        if (i > x_order)
            break;
        Rational c = binomial(alpha_rat, i);
        if (c != 0) {
            ScalarSeries piece = xqpow * Cyc(c);
            Mono shift(p.vars().size(), Frac(0));
            shift[x0idx] = (alpha - Frac(i)) * Frac(k);
            result += piece.shifted(shift);
        }
    }
    return result;
}

ScalarSeries subst_into_z_minus_xalpha(long n, const Frac& alpha, long x0_order, Var xv,
                                       Var x0v) {
    // The i-enumeration below terminates only when binom(n, i) eventually
    // vanishes, i.e. n >= 0. Otherwise every i contributes to the same
    // target coefficients and the sum is the Warning's divergent one.
    if (n < 0)
        throw DivergentSubstitution(
            "(z - x^alpha)^n with z = (x + x0)^alpha and n = " + std::to_string(n) +
            " < 0: each target coefficient has infinitely many contributions");
    ScalarSeries result({xv, x0v});
    for (long i = 0; i <= n; ++i) {
        Rational c = binomial(Rational(n), i);
        if (i & 1)
            c = -c;
        if (c == 0)
            continue;
        // (x + x0)^(alpha (n-i)) truncated, times x^(alpha i)
        Frac outer = alpha * Frac(n - i);
        ScalarSeries piece = binom_expand(+1, outer, x0_order, xv, x0v);
        piece *= Cyc(c);
        result += piece.shifted({alpha * Frac(i), Frac(0)});
    }
    return result;
}

} // namespace voacal
