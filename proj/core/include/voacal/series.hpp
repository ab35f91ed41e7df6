#pragma once

#include "voacal/cyclotomic.hpp"
#include "voacal/errors.hpp"
#include "voacal/fracexp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace voacal {

/// Fixed registry of formal variables used throughout.
enum class Var : std::uint8_t { x, x0, x1, x2, z, z0 };

inline const char* var_name(Var v) {
    switch (v) {
    case Var::x: return "x";
    case Var::x0: return "x0";
    case Var::x1: return "x1";
    case Var::x2: return "x2";
    case Var::z: return "z";
    case Var::z0: return "z0";
    }
    return "?";
}

std::optional<Var> var_from_name(std::string_view name);

/// Exponent tuple aligned with a Series' variable list.
using Mono = std::vector<Frac>;

/// Finitely supported formal sum: Mono -> Coeff, exponents in (1/N)Z.
/// Coeff is Cyc, PBW, or a one-level Series nesting. Zero coefficients
/// are never stored.
template <class Coeff>
class Series {
  public:
    Series() = default;
    explicit Series(std::vector<Var> vars) : vars_(std::move(vars)) {}

    const std::vector<Var>& vars() const { return vars_; }
    const std::map<Mono, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    static Series monomial(std::vector<Var> vars, Mono exps, Coeff c) {
        Series s(std::move(vars));
        s.add_term(std::move(exps), std::move(c));
        return s;
    }

    void add_term(Mono exps, Coeff c) {
        if (voacal::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(exps), std::move(c));
        if (!inserted) {
            it->second += c;
            if (voacal::is_zero(it->second))
                terms_.erase(it);
        }
    }

    /// Coefficient at an exponent tuple (zero if absent).
    Coeff coeff(const Mono& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    Series& operator+=(const Series& o) {
        require_same_vars(o);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        require_same_vars(o);
        for (const auto& [m, c] : o.terms_) {
            Coeff neg = c;
            neg *= Cyc(-1);
            add_term(m, std::move(neg));
        }
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    Series& operator*=(const Cyc& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (voacal::is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }
    friend Series operator*(Series a, const Cyc& s) { return a *= s; }

    /// Multiply by the monomial x_vars^delta.
    Series shifted(const Mono& delta) const {
        Series r(vars_);
        for (const auto& [m, c] : terms_) {
            Mono e = m;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += delta[i];
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    }

    /// Least exponent of v over the support (nullopt if zero series).
    std::optional<Frac> min_exp(Var v) const { return extreme_exp(v, true); }
    std::optional<Frac> max_exp(Var v) const { return extreme_exp(v, false); }

    /// Drops every term whose v-exponent exceeds hi.
    Series truncated_above(Var v, const Frac& hi) const {
        size_t idx = index_of(v);
        Series r(vars_);
        for (const auto& [m, c] : terms_)
            if (!(m[idx] > hi))
                r.terms_.emplace(m, c);
        return r;
    }

    /// Reindexes onto a variable superset (missing exponents become 0).
    Series aligned(const std::vector<Var>& new_vars) const {
        std::vector<size_t> where(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end())
                throw Error("series align: variable missing from target list");
            where[i] = static_cast<size_t>(it - new_vars.begin());
        }
        Series r(new_vars);
        for (const auto& [m, c] : terms_) {
            Mono e(new_vars.size(), Frac(0));
            for (size_t i = 0; i < m.size(); ++i)
                e[where[i]] = m[i];
            r.add_term(std::move(e), c);
        }
        return r;
    }

    size_t index_of(Var v) const {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end())
            throw Error(std::string("series: no such variable ") + var_name(v));
        return static_cast<size_t>(it - vars_.begin());
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

  private:
    std::vector<Var> vars_;
    std::map<Mono, Coeff> terms_;

    void require_same_vars(const Series& o) const {
        if (vars_ != o.vars_)
            throw Error("series: variable lists differ");
    }

    std::optional<Frac> extreme_exp(Var v, bool min) const {
        size_t idx = index_of(v);
        std::optional<Frac> best;
        for (const auto& [m, c] : terms_) {
            if (!best || (min ? m[idx] < *best : m[idx] > *best))
                best = m[idx];
        }
        return best;
    }
};

template <class Coeff>
bool is_zero(const Series<Coeff>& s) {
    return s.is_zero();
}

/// Scalar series times module-valued series (variable lists must agree).
template <class Coeff>
Series<Coeff> mul(const Series<Cyc>& a, const Series<Coeff>& b) {
    if (a.vars() != b.vars())
        throw Error("series mul: variable lists differ");
    Series<Coeff> r(a.vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Mono e = ma;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += mb[i];
            Coeff c = cb;
            c *= ca;
            r.add_term(std::move(e), std::move(c));
        }
    return r;
}

inline Series<Cyc> mul(const Series<Cyc>& a, const Series<Cyc>& b) {
    return mul<Cyc>(a, b);
}

/// Product truncated above in one variable; avoids materializing terms
/// that the truncation would drop.
template <class Coeff>
Series<Coeff> mul_trunc(const Series<Cyc>& a, const Series<Coeff>& b, Var v, const Frac& hi) {
    if (a.vars() != b.vars())
        throw Error("series mul: variable lists differ");
    size_t idx = a.index_of(v);
    Series<Coeff> r(a.vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma[idx] + mb[idx] > hi)
                continue;
            Mono e = ma;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += mb[i];
            Coeff c = cb;
            c *= ca;
            r.add_term(std::move(e), std::move(c));
        }
    return r;
}

using ScalarSeries = Series<Cyc>;

/// Text form: terms "coef * x^(p/q) * x0^(r/s)" joined with +/-.
std::string to_string(const ScalarSeries& s);

/// Parses the same grammar; the variable list is read off the text and
/// normalized to registry order. w in coefficients denotes w_order.
ScalarSeries parse_series(std::string_view text, long order = 1);

} // namespace voacal
