#include "doctest.h"

#include <random>
#include <vector>

#include "daisy/poly.hpp"
#include "daisy/series.hpp"

using namespace daisy;

namespace {

UniPoly uni(const std::vector<long long>& dense) {
    UniPoly p;
    for (std::size_t i = 0; i < dense.size(); ++i) p.add_term(static_cast<int>(i), Bigint{dense[i]});
    return p;
}

// independent reference: dense convolution over long long
std::vector<long long> conv(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

BiPoly bi(const std::vector<std::tuple<int, int, long long>>& terms) {
    BiPoly p;
    for (const auto& [k, d, c] : terms) p.add_term(k, d, Bigint{c});
    return p;
}

} // namespace

TEST_CASE("polynomial ring basics") {
    const UniPoly two_plus_z = uni({2, 1});
    CHECK(two_plus_z * two_plus_z == uni({4, 4, 1}));
    CHECK(two_plus_z + UniPoly{} == two_plus_z);
    CHECK((two_plus_z - two_plus_z).is_zero());
    CHECK(uni({7, 9, 3}).evaluate(Bigint{-1}) == Bigint{1});
    CHECK(uni({7, 9, 3}).evaluate(Bigint{0}) == Bigint{7});
    CHECK(UniPoly{}.degree() == -1);
    CHECK(uni({0, 0, 5}).degree() == 2);

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long long> a(1 + rng() % 6), b(1 + rng() % 6);
        for (auto& c : a) c = coeff(rng);
        for (auto& c : b) c = coeff(rng);
        CHECK(uni(a) * uni(b) == uni(conv(a, b)));
        CHECK(uni(a) * uni(b) == uni(b) * uni(a));
    }
}

TEST_CASE("bivariate ring basics") {
    const BiPoly p = bi({{0, 0, 1}, {1, 0, 2}, {0, 1, 3}});
    const BiPoly q = bi({{1, 1, 1}});
    CHECK(p * q == bi({{1, 1, 1}, {2, 1, 2}, {1, 2, 3}}));
    CHECK(p + BiPoly{} == p);
    CHECK(p.evaluate(Bigint{1}, Bigint{1}) == Bigint{6});
    CHECK(p.coeff(1, 0) == Bigint{2});
    CHECK(p.coeff(5, 5).is_zero());
}

TEST_CASE("shifted-sum substitution") {
    // 2+z at x+y-1 collapses to 1+x+y
    CHECK(substitute_shift(uni({2, 1}), -1) == bi({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    // 7+9z+3z^2 at x+y-1
    CHECK(substitute_shift(uni({7, 9, 3}), -1) ==
          bi({{0, 0, 1}, {1, 0, 3}, {0, 1, 3}, {2, 0, 3}, {1, 1, 6}, {0, 2, 3}}));
    CHECK(substitute_shift(uni({5}), -1) == BiPoly::constant(Bigint{5}));
    CHECK(substitute_shift(UniPoly{}, -1).is_zero());
    // pinning y = 1 in C(x+y-1) recovers C(x)
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long long> a(1 + rng() % 6);
        for (auto& c : a) c = coeff(rng);
        const UniPoly C = uni(a);
        CHECK(substitute_y(substitute_shift(C, -1), 1) == C);
    }
}

TEST_CASE("univariate shift substitution") {
    CHECK(substitute_univariate_shift(uni({1, 3, 3})) == uni({7, 9, 3}));
    for (int n = 0; n <= 6; ++n) {
        const UniPoly onepx = uni({1, 1});
        const UniPoly twopx = uni({2, 1});
        CHECK(substitute_univariate_shift(poly_pow(onepx, n)) == poly_pow(twopx, n));
    }
    CHECK(substitute_univariate_shift(uni({1})) == uni({1}));
}

TEST_CASE("sum substitution") {
    CHECK(substitute_sum(uni({1, 2})) == bi({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}}));
    BiPoly onepxy;
    onepxy.add_term(0, 0, Bigint{1});
    onepxy.add_term(1, 0, Bigint{1});
    onepxy.add_term(0, 1, Bigint{1});
    CHECK(substitute_sum(uni({1, 2, 1})) == poly_pow(onepxy, 2));
    CHECK(substitute_sum(UniPoly{}).is_zero());
    // coefficient of x^k y^d is w_{k+d} * C(k+d, d)
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long long> w(1 + rng() % 7);
        for (auto& c : w) c = static_cast<long long>(rng() % 19) - 9;
        const BiPoly s = substitute_sum(uni(w));
        for (std::size_t m = 0; m < w.size(); ++m)
            for (std::size_t d = 0; d <= m; ++d)
                CHECK(s.coeff(static_cast<int>(m - d), static_cast<int>(d)) ==
                      Bigint{w[m]} * binomial(static_cast<int>(m), static_cast<int>(d)));
    }
    // the sum substitution is symmetric in x and y
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long long> w(1 + rng() % 7);
        for (auto& c : w) c = static_cast<long long>(rng() % 19) - 9;
        const BiPoly s = substitute_sum(uni(w));
        CHECK(swap_vars(s) == s);
    }
}

TEST_CASE("negated substitution") {
    // the off-center census of the 3-cube minus a vertex collapses to 1
    const BiPoly d110 = bi({{0, 0, 1}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1},
                            {1, 0, 2}, {1, 1, 4}, {1, 2, 3}, {2, 0, 1}, {2, 1, 2}});
    CHECK(substitute_neg(d110) == uni({1}));
    BiPoly onepxy;
    onepxy.add_term(0, 0, Bigint{1});
    onepxy.add_term(1, 0, Bigint{1});
    onepxy.add_term(0, 1, Bigint{1});
    for (int n = 0; n <= 6; ++n) CHECK(substitute_neg(poly_pow(onepxy, n)) == uni({1}));
    CHECK(substitute_neg(bi({{1, 1, 1}})) == uni({0, 0, -1}));
}

TEST_CASE("variable swap") {
    CHECK(swap_vars(bi({{0, 0, 1}, {1, 0, 2}, {0, 1, 1}})) == bi({{0, 0, 1}, {0, 1, 2}, {1, 0, 1}}));
    const BiPoly sym = bi({{1, 0, 2}, {0, 1, 2}, {1, 1, 5}});
    CHECK(swap_vars(sym) == sym);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        BiPoly p;
        for (int i = 0; i < 6; ++i)
            p.add_term(static_cast<int>(rng() % 5), static_cast<int>(rng() % 5),
                       Bigint{static_cast<long long>(rng() % 19) - 9});
        CHECK(swap_vars(swap_vars(p)) == p);
    }
}

TEST_CASE("series expansion of rational generating functions") {
    const UniPoly one = UniPoly::constant(Bigint{1});
    const UniPoly x = UniPoly::variable();

    // hypercube distance series: 1 / (1 - z(1+x+y))
    BiPoly onepxy;
    onepxy.add_term(0, 0, Bigint{1});
    onepxy.add_term(1, 0, Bigint{1});
    onepxy.add_term(0, 1, Bigint{1});
    const BiSeries hq{{BiPoly::constant(Bigint{1})}, {BiPoly::constant(Bigint{1}), -onepxy}};
    const auto hq_coeffs = series_coefficients(hq, 5);
    for (int n = 0; n <= 5; ++n) CHECK(hq_coeffs[static_cast<std::size_t>(n)] == poly_pow(onepxy, n));

    // lucas weight series: (1 + x z^2) / (1 - z - x z^2); long-division values
    const UniSeries fl{{one, UniPoly{}, x}, {one, -one, -x}};
    const auto fl_coeffs = series_coefficients(fl, 4);
    CHECK(fl_coeffs[0] == one);
    CHECK(fl_coeffs[1] == one);
    CHECK(fl_coeffs[2] == uni({1, 2}));
    CHECK(fl_coeffs[3] == uni({1, 3}));
    CHECK(fl_coeffs[4] == uni({1, 4, 2}));

    // m = 0 yields the numerator's constant coefficient
    CHECK(series_coefficients(fl, 0) == std::vector<UniPoly>{one});

    // a unit -1 constant term flips every coefficient: 1/(z-1) = -(1+z+z^2+...)
    const UniSeries neg{{one}, {-one, one}};
    const auto neg_coeffs = series_coefficients(neg, 3);
    for (const auto& c : neg_coeffs) CHECK(c == -one);

    // non-unit constant terms are rejected
    const UniSeries bad{{one}, {UniPoly::constant(Bigint{2})}};
    CHECK_THROWS_AS(series_coefficients(bad, 3), std::invalid_argument);
    const UniSeries zero_den{{one}, {UniPoly{}}};
    CHECK_THROWS_AS(series_coefficients(zero_den, 3), std::invalid_argument);
}

TEST_CASE("series transforms implement the two substitutions") {
    for (NamedFamily fam : {NamedFamily::hypercube, NamedFamily::lucas}) {
        const auto f = weight_series(fam);
        REQUIRE(f.has_value());
        const auto fw = series_coefficients(*f, 10);
        const auto gc = series_coefficients(cube_series_from(*f), 10);
        const auto hd = series_coefficients(distance_series_from(*f), 10);
        for (int n = 0; n <= 10; ++n) {
            CHECK(gc[static_cast<std::size_t>(n)] == substitute_univariate_shift(fw[static_cast<std::size_t>(n)]));
            CHECK(hd[static_cast<std::size_t>(n)] == substitute_sum(fw[static_cast<std::size_t>(n)]));
        }
    }
    CHECK_FALSE(weight_series(NamedFamily::fibonacci).has_value());
}

TEST_CASE("degree and order validation") {
    UniPoly p;
    CHECK_THROWS_AS(p.add_term(-1, Bigint{1}), std::invalid_argument);
    BiPoly q;
    CHECK_THROWS_AS(q.add_term(0, -2, Bigint{1}), std::invalid_argument);
    CHECK_THROWS_AS(poly_pow(UniPoly::variable(), -1), std::invalid_argument);
    const UniSeries s{{UniPoly::constant(Bigint{1})}, {UniPoly::constant(Bigint{1})}};
    CHECK_THROWS_AS(series_coefficients(s, -1), std::invalid_argument);
}

TEST_CASE("canonical text form") {
    CHECK(to_string(UniPoly{}) == "0");
    CHECK(to_string(BiPoly{}) == "0");
    CHECK(to_string(uni({7, 9, 3})) == "7 + 9*x + 3*x^2");
    CHECK(to_string(uni({1, -2})) == "1 - 2*x");
    CHECK(to_string(uni({0, 0, -1})) == "-x^2");
    CHECK(to_string(uni({0, 1})) == "x");
    CHECK(to_string(bi({{0, 0, 1}, {1, 0, 3}, {0, 1, 3}, {2, 0, 3}, {1, 1, 6}, {0, 2, 3}})) ==
          "1 + 3*y + 3*x + 3*y^2 + 6*x*y + 3*x^2");
    CHECK(to_string(bi({{1, 1, 1}})) == "x*y");
    CHECK(to_string(bi({{0, 2, -4}})) == "-4*y^2");
}
