#include "doctest.h"

#include <random>
#include <string>

#include "daisy/bigint.hpp"

using daisy::Bigint;
using daisy::binomial;

namespace {

// independent reference: 128-bit machine arithmetic rendered as decimal
std::string i128_str(__int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (m) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

} // namespace

TEST_CASE("bigint arithmetic matches 128-bit reference") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000000000000LL, 1000000000000000000LL);
    for (int i = 0; i < 2000; ++i) {
        const long long a = dist(rng), b = dist(rng);
        CHECK((Bigint(a) + Bigint(b)).str() == i128_str(static_cast<__int128>(a) + b));
        CHECK((Bigint(a) - Bigint(b)).str() == i128_str(static_cast<__int128>(a) - b));
        CHECK((Bigint(a) * Bigint(b)).str() == i128_str(static_cast<__int128>(a) * b));
        CHECK((Bigint(a) < Bigint(b)) == (a < b));
        CHECK((Bigint(a) == Bigint(b)) == (a == b));
    }
}

TEST_CASE("bigint small-value behaviour") {
    CHECK(Bigint{}.str() == "0");
    CHECK(Bigint{0}.is_zero());
    CHECK(Bigint{-0}.signum() == 0);
    CHECK(Bigint{42}.str() == "42");
    CHECK(Bigint{-42}.str() == "-42");
    CHECK((-Bigint{42}).str() == "-42");
    CHECK((-Bigint{}).str() == "0");
    CHECK(Bigint{5} - Bigint{7} == Bigint{-2});
    CHECK(Bigint{-3} * Bigint{-4} == Bigint{12});
    // LLONG_MIN has no positive counterpart in long long
    CHECK(Bigint{-9223372036854775807LL - 1}.str() == "-9223372036854775808");
    CHECK(Bigint::from_u64(~std::uint64_t{0}).str() == "18446744073709551615");
}

TEST_CASE("bigint beyond 64 bits") {
    Bigint p{1};
    const Bigint two{2};
    for (int i = 0; i < 100; ++i) p *= two;
    CHECK(p.str() == "1267650600228229401496703205376"); // 2^100
    CHECK(p == Bigint::from_decimal("1267650600228229401496703205376"));
    CHECK(p - p == Bigint{});
    CHECK((p + (-p)).is_zero());

    Bigint fact{1};
    for (int i = 2; i <= 25; ++i) fact *= Bigint{i};
    CHECK(fact.str() == "15511210043330985984000000"); // 25!
}

TEST_CASE("bigint decimal parsing") {
    CHECK(Bigint::from_decimal("0") == Bigint{});
    CHECK(Bigint::from_decimal("-0").signum() == 0);
    CHECK(Bigint::from_decimal("+17") == Bigint{17});
    CHECK(Bigint::from_decimal("-000123") == Bigint{-123});
    CHECK_THROWS_AS(Bigint::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(Bigint::from_decimal("-"), std::invalid_argument);
    CHECK_THROWS_AS(Bigint::from_decimal("12a3"), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == Bigint{1});
    CHECK(binomial(5, 2) == Bigint{10});
    CHECK(binomial(10, 10) == Bigint{1});
    CHECK(binomial(10, 11).is_zero());
    CHECK(binomial(-1, 0).is_zero());
    CHECK(binomial(4, -1).is_zero());
    CHECK(binomial(64, 32) == Bigint::from_decimal("1832624140942590534"));
    // Pascal identity on a sweep
    for (int a = 1; a <= 20; ++a)
        for (int b = 1; b <= a; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}
