#pragma once

#include <optional>

#include "daisy/census.hpp"
#include "daisy/family.hpp"
#include "daisy/poly.hpp"

namespace daisy {

using UniSeries = RationalSeries<UniPoly>;
using BiSeries = RationalSeries<BiPoly>;

/// Rational generating function in z whose z^n coefficient is the
/// distance-weight polynomial of the n-th family member at the center.
/// Known in rational form for hypercubes and Lucas cubes; the fibonacci
/// family carries a per-member binomial closed form instead, so no rational
/// form is asserted for it (nullopt).
inline std::optional<UniSeries> weight_series(NamedFamily family) {
    const UniPoly one = UniPoly::constant(Bigint{1});
    const UniPoly x = UniPoly::variable();
    switch (family) {
        case NamedFamily::hypercube:
            // 1 / (1 - z(1+x))
            return UniSeries{{one}, {one, -(one + x)}};
        case NamedFamily::lucas:
            // (1 + x z^2) / (1 - z - x z^2)
            return UniSeries{{one, UniPoly{}, x}, {one, -one, -x}};
        default:
            return std::nullopt;
    }
}

/// The cube-count generating function: the weight series with x -> x + 1
/// applied to every numerator and denominator coefficient.
inline UniSeries cube_series_from(const UniSeries& f) {
    UniSeries g;
    for (const auto& p : f.num) g.num.push_back(substitute_univariate_shift(p));
    for (const auto& p : f.den) g.den.push_back(substitute_univariate_shift(p));
    return g;
}

/// The distance-count generating function: the weight series with x -> x + y.
inline BiSeries distance_series_from(const UniSeries& f) {
    BiSeries h;
    for (const auto& p : f.num) h.num.push_back(substitute_sum(p));
    for (const auto& p : f.den) h.den.push_back(substitute_sum(p));
    return h;
}

/// Per-member weight polynomial for the series comparison, including the
/// one-vertex member at n = 0.
inline UniPoly weight_closed_form_or_k1(NamedFamily family, int n) {
    if (n == 0) return UniPoly::constant(Bigint{1});
    return closed_form_W(family, n);
}

} // namespace daisy
