#include "voacal/series.hpp"

#include <cctype>

namespace voacal {

std::optional<Var> var_from_name(std::string_view name) {
    for (Var v : {Var::x, Var::x0, Var::x1, Var::x2, Var::z, Var::z0})
        if (name == var_name(v))
            return v;
    return std::nullopt;
}

namespace {

std::string exponent_str(const Frac& e) {
    if (e.is_integer() && e.num >= 0)
        return std::to_string(e.num);
    return "(" + e.str() + ")";
}

// Renders one monomial factor list, e.g. "x^(1/2) * x0^2"; empty for the
// constant monomial.
std::string mono_str(const std::vector<Var>& vars, const Mono& m) {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (m[i].is_zero())
            continue;
        if (!out.empty())
            out += " * ";
        out += var_name(vars[i]);
        if (!(m[i] == Frac(1)))
            out += "^" + exponent_str(m[i]);
    }
    return out;
}

} // namespace

std::string to_string(const ScalarSeries& s) {
    if (s.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : s.terms()) {
        Cyc coef = c;
        std::string sep;
        if (out.empty()) {
            if (coef.is_rational() && coef.rational() < 0) {
                out += "-";
                coef = -coef;
            }
        } else if (coef.is_rational() && coef.rational() < 0) {
            sep = " - ";
            coef = -coef;
        } else {
            sep = " + ";
        }
        out += sep;
        std::string cs = coef.str();
        bool needs_parens = !coef.is_rational();
        if (needs_parens)
            cs = "(" + cs + ")";
        std::string ms = mono_str(s.vars(), m);
        if (ms.empty())
            out += cs;
        else if (cs == "1")
            out += ms;
        else
            out += cs + "*" + ms;
    }
    return out;
}

namespace {

struct SeriesParser {
    std::string_view s;
    size_t pos = 0;
    long order;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos]))))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    Frac exponent() {
        skip_ws();
        if (peek() == '(') {
            ++pos;
            size_t start = pos;
            while (pos < s.size() && s[pos] != ')')
                ++pos;
            if (pos >= s.size())
                throw ParseError("unbalanced parenthesis in exponent");
            Frac e = parse_frac(s.substr(start, pos - start));
            ++pos;
            return e;
        }
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+'))
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return parse_frac(s.substr(start, pos - start));
    }

    Cyc coefficient() {
        skip_ws();
        if (peek() == '(') {
            ++pos;
            size_t start = pos;
            int depth = 1;
            while (pos < s.size() && depth > 0) {
                if (s[pos] == '(')
                    ++depth;
                if (s[pos] == ')')
                    --depth;
                ++pos;
            }
            if (depth != 0)
                throw ParseError("unbalanced parenthesis in coefficient");
            return parse_cyc(s.substr(start, pos - start - 1), order);
        }
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/' ||
                s[pos] == 'w' || s[pos] == '^' || s[pos] == '*')) {
            // stop before a '*' that introduces a variable factor
            if (s[pos] == '*') {
                size_t look = pos + 1;
                while (look < s.size() && std::isspace(static_cast<unsigned char>(s[look])))
                    ++look;
                if (look < s.size() && std::isalpha(static_cast<unsigned char>(s[look])) &&
                    s[look] != 'w')
                    break;
            }
            ++pos;
        }
        return parse_cyc(s.substr(start, pos - start), order);
    }
};

} // namespace

ScalarSeries parse_series(std::string_view text, long order) {
    std::vector<Var> vars = {Var::x, Var::x0, Var::x1, Var::x2, Var::z, Var::z0};
    ScalarSeries acc(vars);
    SeriesParser p{text, 0, order};
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    if (p.eof())
        throw ParseError("empty series literal");
    while (true) {
        Cyc coef(sign);
        char c = p.peek();
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == '(') {
            coef *= p.coefficient();
            have_coef = true;
        }
        Mono exps(vars.size(), Frac(0));
        bool have_var = false;
        while (true) {
            p.skip_ws();
            if (p.peek() == '*') {
                ++p.pos;
                p.skip_ws();
            } else if (have_coef || have_var) {
                // factors must be * separated; stop at +/- or end
                if (p.eof() || p.peek() == '+' || p.peek() == '-')
                    break;
                if (!std::isalpha(static_cast<unsigned char>(p.peek())))
                    throw ParseError("unexpected character in series literal");
            }
            if (p.eof() || p.peek() == '+' || p.peek() == '-')
                break;
            std::string name = p.ident();
            auto v = var_from_name(name);
            if (!v)
                throw ParseError("unknown variable '" + name + "'");
            Frac e(1);
            if (p.peek() == '^') {
                ++p.pos;
                e = p.exponent();
            }
            exps[acc.index_of(*v)] += e;
            have_var = true;
        }
        if (!have_coef && !have_var)
            throw ParseError("empty term in series literal");
        acc.add_term(std::move(exps), coef);
        if (p.eof())
            break;
        char sep = p.peek();
        if (sep == '+')
            sign = 1;
        else if (sep == '-')
            sign = -1;
        else
            throw ParseError("expected + or - between series terms");
        ++p.pos;
    }
    return acc;
}

} // namespace voacal
