#pragma once

#include "voacal/series.hpp"

namespace voacal {

/// (x_a +/- x_b)^alpha expanded in nonnegative integral powers of the
/// SECOND variable, truncated at x_b^order:
///   sum_{i=0..order} binom(alpha,i)(+/-1)^i x_a^(alpha-i) x_b^i.
/// Terminates exactly (all i) when alpha is a nonnegative integer.
ScalarSeries binom_expand(int sign, const Frac& alpha, long order, Var a = Var::x1,
                          Var b = Var::x2);

/// ((x + x0)^alpha - x^alpha)^n under the x >> x0 convention, truncated at
/// x0^x0_order. Well-defined for every integer n and nonzero alpha: the
/// base is x^(alpha-1) x0 (alpha + x0 f) with invertible leading scalar.
/// Result lies in x^(n alpha) x0^n * (Laurent in x)[[x0]].
ScalarSeries base_pow(long n, const Frac& alpha, long x0_order, Var xv = Var::x,
                      Var x0v = Var::x0);

/// Substitutes z = (x + x0)^alpha - x^alpha (x >> x0) into a finite series
/// S over {zvar} or {xv, zvar}; result over (xv, x0v) truncated at
/// x0v^x0_order.
ScalarSeries subst_x_dominant(const ScalarSeries& S, Var zvar, const Frac& alpha,
                              long x0_order, Var xv = Var::x, Var x0v = Var::x0);

/// z^alpha|_{z = p(x0,x), x0 >> x} for p = x0^k + x q(x0, x):
///   sum_i binom(alpha,i) x0^(k(alpha-i)) (x q)^i, truncated at x^x_order.
/// Throws MalformedBase when p lacks the pure x0^k leading part.
ScalarSeries subst_x0_dominant(const Frac& alpha, const ScalarSeries& p, long x_order);

/// The Warning expansion (z - x^alpha)^n|_{z=(x+x0)^alpha}. For n >= 0 the
/// double sum is finite per coefficient and the exact polynomial is
/// returned; for n < 0 the index set contributing to any single target
/// coefficient never terminates and DivergentSubstitution is raised.
ScalarSeries subst_into_z_minus_xalpha(long n, const Frac& alpha, long x0_order,
                                       Var xv = Var::x, Var x0v = Var::x0);

/// Formal limit x^(1/N) -> alpha x^(1/N): multiplies the coefficient at
/// exponent m/N by alpha^m. Requires alpha^N = 1 (else NotARoot).
template <class Coeff>
Series<Coeff> rescale_fractional(const Series<Coeff>& S, Var v, long N, const Cyc& alpha) {
    if (!(alpha.pow(N) == Cyc(1)))
        throw NotARoot("rescale: alpha^" + std::to_string(N) + " != 1");
    size_t idx = S.index_of(v);
    Series<Coeff> r(S.vars());
    for (const auto& [m, c] : S.terms()) {
        if (m[idx].den > N || N % m[idx].den != 0)
            throw NotARoot("rescale: exponent " + m[idx].str() + " not in (1/" +
                           std::to_string(N) + ")Z");
        Coeff scaled = c;
        scaled *= alpha.pow(m[idx].scaled_num(N));
        r.add_term(m, std::move(scaled));
    }
    return r;
}

} // namespace voacal
