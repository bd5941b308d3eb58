#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daisy/bigint.hpp"

namespace daisy {

/// Exact sparse univariate polynomial with Bigint coefficients.
/// No explicit zero terms are ever stored.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly constant(Bigint c) {
        UniPoly p;
        p.add_term(0, c);
        return p;
    }

    static UniPoly variable() {
        UniPoly p;
        p.add_term(1, Bigint{1});
        return p;
    }

    void add_term(int deg, const Bigint& c) {
        if (deg < 0) throw std::invalid_argument("UniPoly: negative degree");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(deg, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Bigint coeff(int deg) const {
        auto it = terms_.find(deg);
        return it == terms_.end() ? Bigint{} : it->second;
    }

    /// Degree of the zero polynomial is -1.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Bigint>& terms() const { return terms_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly& operator+=(const UniPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }

    UniPoly operator-() const {
        UniPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
        return r;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(const UniPoly& a, const Bigint& s) {
        UniPoly r;
        if (s.is_zero()) return r;
        for (const auto& [d, c] : a.terms_) r.terms_.emplace(d, c * s);
        return r;
    }

    Bigint evaluate(const Bigint& x) const {
        Bigint r, pow{1};
        int at = 0;
        for (const auto& [d, c] : terms_) {
            while (at < d) {
                pow *= x;
                ++at;
            }
            r += c * pow;
        }
        return r;
    }

private:
    std::map<int, Bigint> terms_;
};

/// Exact sparse bivariate polynomial in (x, y), keyed by (x-degree, y-degree).
class BiPoly {
public:
    BiPoly() = default;

    static BiPoly constant(Bigint c) {
        BiPoly p;
        p.add_term(0, 0, c);
        return p;
    }

    void add_term(int xdeg, int ydeg, const Bigint& c) {
        if (xdeg < 0 || ydeg < 0) throw std::invalid_argument("BiPoly: negative degree");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::pair{xdeg, ydeg}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Bigint coeff(int xdeg, int ydeg) const {
        auto it = terms_.find({xdeg, ydeg});
        return it == terms_.end() ? Bigint{} : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Bigint>& terms() const { return terms_; }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [kd, c] : o.terms_) add_term(kd.first, kd.second, c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }

    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [kd, c] : terms_) r.terms_.emplace(kd, -c);
        return r;
    }
    BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend BiPoly operator*(const BiPoly& a, const Bigint& s) {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [kd, c] : a.terms_) r.terms_.emplace(kd, c * s);
        return r;
    }

    Bigint evaluate(const Bigint& x, const Bigint& y) const {
        Bigint r;
        for (const auto& [kd, c] : terms_) {
            Bigint t = c;
            for (int i = 0; i < kd.first; ++i) t *= x;
            for (int i = 0; i < kd.second; ++i) t *= y;
            r += t;
        }
        return r;
    }

private:
    std::map<std::pair<int, int>, Bigint> terms_;
};

template <class P>
P poly_pow(P base, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    P r = P::constant(Bigint{1});
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Embed a univariate polynomial in x as a bivariate one.
inline BiPoly to_bipoly(const UniPoly& p) {
    BiPoly r;
    for (const auto& [d, c] : p.terms()) r.add_term(d, 0, c);
    return r;
}

namespace detail {

/// C evaluated at an arbitrary polynomial argument, exactly.
template <class P>
P compose(const UniPoly& C, const P& arg) {
    P r, pow = P::constant(Bigint{1});
    int at = 0;
    for (const auto& [d, c] : C.terms()) {
        while (at < d) {
            pow *= arg;
            ++at;
        }
        r += pow * c;
    }
    return r;
}

} // namespace detail

/// C(x + y + a): the bivariate expansion of C at the shifted sum argument.
inline BiPoly substitute_shift(const UniPoly& C, long long a) {
    BiPoly arg;
    arg.add_term(1, 0, Bigint{1});
    arg.add_term(0, 1, Bigint{1});
    arg.add_term(0, 0, Bigint{a});
    return detail::compose(C, arg);
}

/// W(x + 1).
inline UniPoly substitute_univariate_shift(const UniPoly& W) {
    UniPoly arg;
    arg.add_term(1, Bigint{1});
    arg.add_term(0, Bigint{1});
    return detail::compose(W, arg);
}

/// W(x + y).
inline BiPoly substitute_sum(const UniPoly& W) {
    BiPoly arg;
    arg.add_term(1, 0, Bigint{1});
    arg.add_term(0, 1, Bigint{1});
    return detail::compose(W, arg);
}

/// D(x, -x), collected as a univariate polynomial.
inline UniPoly substitute_neg(const BiPoly& D) {
    UniPoly r;
    for (const auto& [kd, c] : D.terms()) {
        Bigint t = (kd.second % 2 == 0) ? c : -c;
        r.add_term(kd.first + kd.second, t);
    }
    return r;
}

/// Exchange the two variables; an involution.
inline BiPoly swap_vars(const BiPoly& D) {
    BiPoly r;
    for (const auto& [kd, c] : D.terms()) r.add_term(kd.second, kd.first, c);
    return r;
}

/// D with y pinned to an integer, e.g. y = 1 recovers the one-variable count.
inline UniPoly substitute_y(const BiPoly& D, long long y0) {
    UniPoly r;
    const Bigint yv{y0};
    for (const auto& [kd, c] : D.terms()) {
        Bigint t = c;
        for (int i = 0; i < kd.second; ++i) t *= yv;
        r.add_term(kd.first, t);
    }
    return r;
}

/// Quotient of two polynomials in the series variable z; coefficients live in
/// the polynomial ring P.  The denominator's constant term must be the unit
/// +-1, which every generating function handled here satisfies, so expansion
/// stays inside exact integers.
template <class P>
struct RationalSeries {
    std::vector<P> num; // coefficient of z^i
    std::vector<P> den;
};

/// Coefficients of z^0..z^m of the power-series expansion.
template <class P>
std::vector<P> series_coefficients(const RationalSeries<P>& s, int m) {
    if (m < 0) throw std::invalid_argument("series_coefficients: negative order");
    if (s.den.empty() || s.den[0].is_zero())
        throw std::invalid_argument("series_coefficients: zero constant term in denominator");
    const P one = P::constant(Bigint{1});
    const P minus_one = P::constant(Bigint{-1});
    bool invert_sign;
    if (s.den[0] == one)
        invert_sign = false;
    else if (s.den[0] == minus_one)
        invert_sign = true;
    else
        throw std::invalid_argument("series_coefficients: denominator constant term must be +-1");

    std::vector<P> out(static_cast<std::size_t>(m) + 1);
    for (int n = 0; n <= m; ++n) {
        P acc = static_cast<std::size_t>(n) < s.num.size() ? s.num[static_cast<std::size_t>(n)] : P{};
        for (int j = 1; j <= n && static_cast<std::size_t>(j) < s.den.size(); ++j)
            acc -= s.den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(n - j)];
        out[static_cast<std::size_t>(n)] = invert_sign ? -acc : acc;
    }
    return out;
}

namespace detail {

inline void render_term(std::string& out, const Bigint& c, const std::string& vars) {
    const bool neg = c.signum() < 0;
    const Bigint mag = neg ? -c : c;
    std::string body;
    if (vars.empty())
        body = mag.str();
    else if (mag == Bigint{1})
        body = vars;
    else
        body = mag.str() + "*" + vars;
    if (out.empty())
        out = neg ? "-" + body : body;
    else
        out += (neg ? " - " : " + ") + body;
}

inline std::string var_power(const char* v, int e) {
    if (e == 0) return "";
    if (e == 1) return v;
    return std::string(v) + "^" + std::to_string(e);
}

} // namespace detail

/// Canonical text form: ascending degree, `c*x^k` pieces with unit parts left out.
inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : p.terms()) detail::render_term(out, c, detail::var_power("x", d));
    return out;
}

/// Canonical text form: ascending total degree, then ascending x-degree.
inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, Bigint>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    std::string out;
    for (const auto& [kd, c] : terms) {
        std::string vars = detail::var_power("x", kd.first);
        std::string ypart = detail::var_power("y", kd.second);
        if (!vars.empty() && !ypart.empty())
            vars += "*" + ypart;
        else if (vars.empty())
            vars = ypart;
        detail::render_term(out, c, vars);
    }
    return out;
}

} // namespace daisy
