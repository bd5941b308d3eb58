#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace daisy {

/// Fixed-length binary word, the vertex alphabet of the hypercube.
///
/// Encoding (fixed once, relied on everywhere): a word of length n keeps
/// coordinate i (1-based) at bit position n - i of bits(), i.e. bits() is the
/// text form read as a base-2 numeral.  "110" has length 3 and bits 0b110.
/// Consequences: the canonical numeric order of equal-length words coincides
/// with lexicographic order of their text forms, and all coordinatewise
/// operations are single machine-word instructions.
///
/// Lengths run 0..64.  The length-0 word exists only as the vertex of the
/// one-vertex graph (it cannot be parsed from text).  Words of different
/// lengths never mix: combining them throws std::invalid_argument.
class Word {
public:
    static constexpr int max_length = 64;

    /// The empty word (n = 0).
    constexpr Word() noexcept = default;

    static Word zero(int n) { return Word(check_length(n), 0); }

    static Word ones(int n) {
        check_length(n);
        return Word(n, n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n));
    }

    static Word from_bits(int n, std::uint64_t bits) {
        check_length(n);
        if (n < 64 && (bits >> n) != 0)
            throw std::invalid_argument("Word: bits set above position n");
        return Word(n, bits);
    }

    static Word parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("Word: empty text");
        if (text.size() > max_length) throw std::invalid_argument("Word: more than 64 coordinates");
        std::uint64_t bits = 0;
        for (char c : text) {
            if (c != '0' && c != '1') throw std::invalid_argument("Word: character outside {0,1}");
            bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return Word(static_cast<int>(text.size()), bits);
    }

    int length() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    /// Coordinate i, 1-based; u_1 is the leftmost character of the text form.
    bool coord(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("Word: coordinate index");
        return (bits_ >> (n_ - i)) & 1;
    }

    friend bool operator==(Word, Word) = default;
    friend std::strong_ordering operator<=>(Word, Word) = default;

private:
    std::uint8_t n_ = 0;
    std::uint64_t bits_ = 0;

    Word(int n, std::uint64_t bits) : n_(static_cast<std::uint8_t>(n)), bits_(bits) {}

    static int check_length(int n) {
        if (n < 0 || n > max_length) throw std::invalid_argument("Word: length must be in 0..64");
        return n;
    }

    friend Word require_same_length(Word u, Word v);
};

inline Word require_same_length(Word u, Word v) {
    if (u.length() != v.length()) throw std::invalid_argument("Word: length mismatch");
    return u;
}

/// Number of 1-coordinates.
inline int weight(Word u) { return std::popcount(u.bits()); }

/// Coordinatewise partial order: u <= v iff u_i <= v_i for all i.
inline bool leq(Word u, Word v) {
    require_same_length(u, v);
    return (u.bits() & ~v.bits()) == 0;
}

/// Coordinatewise AND, the greatest word below both arguments.
inline Word meet(Word u, Word v) {
    require_same_length(u, v);
    return Word::from_bits(u.length(), u.bits() & v.bits());
}

/// Number of coordinates where u and v differ (graph distance in the full cube).
inline int hamming(Word u, Word v) {
    require_same_length(u, v);
    return std::popcount(u.bits() ^ v.bits());
}

/// Coordinatewise XOR (the recentering automorphism of the cube).
inline Word operator^(Word u, Word v) {
    require_same_length(u, v);
    return Word::from_bits(u.length(), u.bits() ^ v.bits());
}

/// Coordinatewise OR, the least word above both arguments.
inline Word operator|(Word u, Word v) {
    require_same_length(u, v);
    return Word::from_bits(u.length(), u.bits() | v.bits());
}

inline std::string to_string(Word u) {
    std::string s(static_cast<std::size_t>(u.length()), '0');
    for (int i = 1; i <= u.length(); ++i)
        if (u.coord(i)) s[static_cast<std::size_t>(i) - 1] = '1';
    return s;
}

} // namespace daisy
