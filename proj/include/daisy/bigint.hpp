#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace daisy {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Deliberately small: the polynomial layer needs exact +, -, * and decimal
/// conversion, nothing else.  Limbs are little-endian with no trailing zero
/// limbs; an empty limb vector is zero (and zero is never negative).
class Bigint {
public:
    Bigint() = default;

    Bigint(long long v) {
        if (v == 0) return;
        neg_ = v < 0;
        // avoid UB on LLONG_MIN
        std::uint64_t m = neg_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        push_u64(m);
    }

    static Bigint from_u64(std::uint64_t v) {
        Bigint r;
        r.push_u64(v);
        return r;
    }

    static Bigint from_decimal(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Bigint: empty decimal string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("Bigint: sign without digits");
        Bigint r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("Bigint: bad digit in decimal string");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(c - '0'));
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    int signum() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const Bigint&, const Bigint&) = default;

    friend std::strong_ordering operator<=>(const Bigint& a, const Bigint& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.neg_) c = -c;
        return c <=> 0;
    }

    Bigint operator-() const {
        Bigint r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    Bigint& operator+=(const Bigint& o) {
        if (neg_ == o.neg_) {
            mag_ = add_mag(mag_, o.mag_);
        } else {
            int c = cmp_mag(mag_, o.mag_);
            if (c == 0) {
                mag_.clear();
                neg_ = false;
            } else if (c > 0) {
                mag_ = sub_mag(mag_, o.mag_);
            } else {
                mag_ = sub_mag(o.mag_, mag_);
                neg_ = o.neg_;
            }
        }
        return *this;
    }

    Bigint& operator-=(const Bigint& o) { return *this += -o; }

    friend Bigint operator+(Bigint a, const Bigint& b) { return a += b; }
    friend Bigint operator-(Bigint a, const Bigint& b) { return a -= b; }

    friend Bigint operator*(const Bigint& a, const Bigint& b) {
        Bigint r;
        if (a.mag_.empty() || b.mag_.empty()) return r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    Bigint& operator*=(const Bigint& o) { return *this = *this * o; }

    std::string str() const {
        if (mag_.empty()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (neg_) out.insert(0, 1, '-');
        return out;
    }

private:
    std::vector<std::uint32_t> mag_;
    bool neg_ = false;

    void push_u64(std::uint64_t m) {
        if (m == 0) return;
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }

    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            std::uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& lo = a.size() < b.size() ? a : b;
        const auto& hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline std::string to_string(const Bigint& v) { return v.str(); }

/// Exact binomial coefficient, zero outside the Pascal triangle
/// (negative arguments or b > a).
inline Bigint binomial(int a, int b) {
    if (b < 0 || a < 0 || b > a) return Bigint{};
    b = std::min(b, a - b);
    // one Pascal row, built in place
    std::vector<Bigint> row(static_cast<std::size_t>(b) + 1);
    row[0] = Bigint{1};
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) row[j] += row[j - 1];
    }
    return row[b];
}

} // namespace daisy
