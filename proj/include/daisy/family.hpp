#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "daisy/word.hpp"

namespace daisy {

/// Hard cap on materialized vertex sets.  Everything here is meant for
/// desk-scale instances; past this point an enumeration is a mistake, not a
/// workload.
inline constexpr std::size_t max_vertex_count = std::size_t{1} << 22;

/// Deduplicated, canonically ordered set of equal-length words.  The order is
/// ascending numeric value of the bit encoding, which for this encoding is
/// also lexicographic order of the text forms.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(validate_length(n)) {}

    VertexSet(int n, std::vector<std::uint64_t> words) : n_(validate_length(n)), bits_(std::move(words)) {
        for (std::uint64_t w : bits_)
            if (n < 64 && (w >> n) != 0)
                throw std::invalid_argument("VertexSet: word has bits above position n");
        std::sort(bits_.begin(), bits_.end());
        bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
        if (bits_.size() > max_vertex_count) throw std::length_error("VertexSet: too many vertices");
    }

    static VertexSet from_words(int n, const std::vector<Word>& words) {
        std::vector<std::uint64_t> raw;
        raw.reserve(words.size());
        for (Word w : words) {
            if (w.length() != n) throw std::invalid_argument("VertexSet: word of wrong length");
            raw.push_back(w.bits());
        }
        return VertexSet(n, std::move(raw));
    }

    int length() const { return n_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    bool contains(Word w) const {
        if (w.length() != n_) return false;
        return std::binary_search(bits_.begin(), bits_.end(), w.bits());
    }

    Word at(std::size_t i) const { return Word::from_bits(n_, bits_.at(i)); }

    const std::vector<std::uint64_t>& raw() const { return bits_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    class const_iterator {
    public:
        using value_type = Word;
        using difference_type = std::ptrdiff_t;

        const_iterator() = default;
        const_iterator(const VertexSet* vs, std::size_t i) : vs_(vs), i_(i) {}
        Word operator*() const { return vs_->at(i_); }
        const_iterator& operator++() { ++i_; return *this; }
        const_iterator operator++(int) { auto t = *this; ++i_; return t; }
        friend bool operator==(const_iterator, const_iterator) = default;

    private:
        const VertexSet* vs_ = nullptr;
        std::size_t i_ = 0;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, bits_.size()}; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;

    static int validate_length(int n) {
        if (n < 0 || n > Word::max_length) throw std::invalid_argument("VertexSet: length must be in 0..64");
        return n;
    }
};

/// A generator set is a plain word set; the distinction from VertexSet is
/// role, not representation.
using GeneratorSet = VertexSet;

/// Downward-closed vertex set together with its antichain of maximal
/// vertices.  Construction verifies closedness, so a DaisyCube value is
/// always a genuine daisy cube (possibly the empty one).
class DaisyCube {
public:
    DaisyCube() = default;

    /// Wraps a vertex set already known (and here re-verified) to be
    /// downward closed; derives the maximal antichain.
    static DaisyCube from_closed(VertexSet vertices) {
        const int n = vertices.length();
        std::vector<std::uint64_t> maximal;
        for (std::uint64_t w : vertices.raw()) {
            // closed: every single-bit clear stays inside
            for (std::uint64_t rest = w; rest;) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                if (!std::binary_search(vertices.raw().begin(), vertices.raw().end(), w ^ bit))
                    throw std::invalid_argument("DaisyCube: vertex set is not downward closed");
            }
            // maximal: no single-bit raise stays inside
            bool is_max = true;
            for (int b = 0; b < n && is_max; ++b) {
                std::uint64_t up = w | (std::uint64_t{1} << b);
                if (up != w && std::binary_search(vertices.raw().begin(), vertices.raw().end(), up))
                    is_max = false;
            }
            if (is_max) maximal.push_back(w);
        }
        return DaisyCube(std::move(vertices), VertexSet(n, std::move(maximal)));
    }

    int length() const { return vertices_.length(); }
    bool empty() const { return vertices_.empty(); }
    const VertexSet& vertices() const { return vertices_; }
    const VertexSet& maximal() const { return maximal_; }
    bool contains(Word w) const { return vertices_.contains(w); }

    friend bool operator==(const DaisyCube&, const DaisyCube&) = default;

private:
    VertexSet vertices_;
    VertexSet maximal_;

    DaisyCube(VertexSet vertices, VertexSet maximal)
        : vertices_(std::move(vertices)), maximal_(std::move(maximal)) {}
};

/// All words below some generator: the daisy cube generated by X.
/// Worklist over single-bit clears, so sparse families never touch the full
/// cube.  An empty X yields the (flagged) empty daisy cube.
inline DaisyCube downward_closure(const GeneratorSet& X) {
    std::unordered_set<std::uint64_t> seen(X.raw().begin(), X.raw().end());
    std::vector<std::uint64_t> work(X.raw().begin(), X.raw().end());
    while (!work.empty()) {
        std::uint64_t w = work.back();
        work.pop_back();
        for (std::uint64_t rest = w; rest;) {
            std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            if (seen.insert(w ^ bit).second) {
                if (seen.size() > max_vertex_count)
                    throw std::length_error("downward_closure: closure exceeds the vertex cap");
                work.push_back(w ^ bit);
            }
        }
    }
    return DaisyCube::from_closed(
        VertexSet(X.length(), std::vector<std::uint64_t>(seen.begin(), seen.end())));
}

/// Elements of X not strictly below another element of X.  Generates the
/// same daisy cube as X.
inline GeneratorSet maximal_antichain(const GeneratorSet& X) {
    const auto& raw = X.raw();
    std::vector<std::uint64_t> keep;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        bool dominated = false;
        // any dominator has a numerically larger encoding, so it sits to the right
        for (std::size_t j = i + 1; j < raw.size() && !dominated; ++j)
            if ((raw[i] & ~raw[j]) == 0) dominated = true;
        if (!dominated) keep.push_back(raw[i]);
    }
    return GeneratorSet(X.length(), std::move(keep));
}

namespace detail {

inline void require_positive(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

template <class Pred>
VertexSet filter_words(int n, Pred&& keep) {
    // backtracking over prefixes; output-sensitive for sparse predicates
    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> prefixes{0};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(prefixes.size() * 2);
        for (std::uint64_t p : prefixes) {
            for (std::uint64_t b : {std::uint64_t{0}, std::uint64_t{1}}) {
                std::uint64_t q = (p << 1) | b;
                if (keep(q, i + 1)) next.push_back(q);
            }
        }
        if (next.size() > max_vertex_count) throw std::length_error("family: too many vertices");
        prefixes = std::move(next);
    }
    return VertexSet(n, std::move(prefixes));
}

} // namespace detail

/// The full n-cube: every word of length n.
inline DaisyCube hypercube(int n) {
    detail::require_positive(n, "hypercube");
    if (n >= 23) throw std::length_error("hypercube: too many vertices");
    std::vector<std::uint64_t> all(std::size_t{1} << n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return DaisyCube::from_closed(VertexSet(n, std::move(all)));
}

/// Words with no two consecutive 1s.  n = 0 gives the one-vertex graph.
inline DaisyCube fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: n must be >= 0");
    return DaisyCube::from_closed(
        detail::filter_words(n, [](std::uint64_t w, int) { return (w & (w >> 1)) == 0; }));
}

/// Fibonacci words whose first and last coordinates are not both 1.
/// n = 0 gives the one-vertex graph.
inline DaisyCube lucas(int n) {
    if (n < 0) throw std::invalid_argument("lucas: n must be >= 0");
    return DaisyCube::from_closed(detail::filter_words(n, [n](std::uint64_t w, int len) {
        if (w & (w >> 1)) return false;
        if (len == n && n >= 1) {
            bool first = (w >> (n - 1)) & 1, last = w & 1;
            if (first && last) return false;
        }
        return true;
    }));
}

/// The n-cube minus its all-ones vertex: every word of weight at most n-1.
inline DaisyCube vertex_deleted(int n) {
    detail::require_positive(n, "vertex_deleted");
    if (n >= 23) throw std::length_error("vertex_deleted: too many vertices");
    std::vector<std::uint64_t> all((std::size_t{1} << n) - 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return DaisyCube::from_closed(VertexSet(n, std::move(all)));
}

/// The gear graph: closure of the n words with two cyclically adjacent 1s.
inline DaisyCube bipartite_wheel(int n) {
    if (n < 3) throw std::invalid_argument("bipartite_wheel: n must be >= 3");
    std::vector<std::uint64_t> gens;
    for (int i = 0; i + 1 < n; ++i)
        gens.push_back(std::uint64_t{3} << (n - 2 - i));
    gens.push_back((std::uint64_t{1} << (n - 1)) | 1);
    return downward_closure(GeneratorSet(n, std::move(gens)));
}

/// Words containing no run of k consecutive 1s (k = 2 recovers fibonacci).
inline DaisyCube run_free(int n, int k) {
    detail::require_positive(n, "run_free");
    if (k < 2) throw std::invalid_argument("run_free: k must be >= 2");
    const std::uint64_t probe =
        k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    return DaisyCube::from_closed(detail::filter_words(n, [k, probe](std::uint64_t w, int len) {
        // prefixes are already run-free, so only a run ending at the newest
        // coordinate (the low k bits all 1) can appear
        if (k > len) return true;
        return (w & probe) != probe;
    }));
}

/// Concatenation product: G's coordinates first, then H's.
inline DaisyCube cartesian_product(const DaisyCube& G, const DaisyCube& H) {
    const int n = G.length() + H.length();
    if (n > Word::max_length) throw std::invalid_argument("cartesian_product: combined length over 64");
    if (G.empty() || H.empty()) return DaisyCube::from_closed(VertexSet(n));
    if (G.vertices().size() > max_vertex_count / H.vertices().size())
        throw std::length_error("cartesian_product: too many vertices");
    std::vector<std::uint64_t> verts;
    verts.reserve(G.vertices().size() * H.vertices().size());
    for (std::uint64_t g : G.vertices().raw())
        for (std::uint64_t h : H.vertices().raw())
            verts.push_back((g << H.length()) | h);
    return DaisyCube::from_closed(VertexSet(n, std::move(verts)));
}

/// XOR-translate every member by u; an isomorphism of induced subgraphs of
/// the cube (an involution), in general not closure-preserving.
inline VertexSet recenter(const VertexSet& V, Word u) {
    if (V.length() != u.length()) throw std::invalid_argument("recenter: length mismatch");
    std::vector<std::uint64_t> out;
    out.reserve(V.size());
    for (std::uint64_t w : V.raw()) out.push_back(w ^ u.bits());
    return VertexSet(V.length(), std::move(out));
}

/// Vertices on shortest u,v-paths in the full cube: free on the coordinates
/// where u and v differ, pinned elsewhere.  |result| = 2^hamming(u,v).
inline VertexSet interval(Word u, Word v) {
    require_same_length(u, v);
    if (hamming(u, v) > 22) throw std::length_error("interval: too many vertices");
    const std::uint64_t base = u.bits() & v.bits();
    const std::uint64_t mask = u.bits() ^ v.bits();
    std::vector<std::uint64_t> out;
    out.reserve(std::size_t{1} << hamming(u, v));
    std::uint64_t s = mask;
    while (true) {
        out.push_back(base | s);
        if (s == 0) break;
        s = (s - 1) & mask;
    }
    return VertexSet(u.length(), std::move(out));
}

/// Edges of the subgraph induced by V in the cube.
inline std::size_t edge_count(const VertexSet& V) {
    std::size_t edges = 0;
    for (std::uint64_t w : V.raw())
        for (int b = 0; b < V.length(); ++b) {
            std::uint64_t other = w ^ (std::uint64_t{1} << b);
            if (other > w && std::binary_search(V.raw().begin(), V.raw().end(), other)) ++edges;
        }
    return edges;
}

enum class NamedFamily { hypercube, fibonacci, lucas, vertex_deleted, bipartite_wheel, run_free };

inline std::string_view family_name(NamedFamily f) {
    switch (f) {
        case NamedFamily::hypercube: return "hypercube";
        case NamedFamily::fibonacci: return "fibonacci";
        case NamedFamily::lucas: return "lucas";
        case NamedFamily::vertex_deleted: return "vertex-deleted";
        case NamedFamily::bipartite_wheel: return "bipartite-wheel";
        case NamedFamily::run_free: return "run-free";
    }
    return "?";
}

inline std::optional<NamedFamily> family_from_name(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '_', '-');
    if (s == "hypercube" || s == "cube") return NamedFamily::hypercube;
    if (s == "fibonacci") return NamedFamily::fibonacci;
    if (s == "lucas") return NamedFamily::lucas;
    if (s == "vertex-deleted") return NamedFamily::vertex_deleted;
    if (s == "bipartite-wheel" || s == "gear") return NamedFamily::bipartite_wheel;
    if (s == "run-free") return NamedFamily::run_free;
    return std::nullopt;
}

inline DaisyCube make_family(NamedFamily f, int n, int k = 2) {
    switch (f) {
        case NamedFamily::hypercube: return hypercube(n);
        case NamedFamily::fibonacci: return fibonacci(n);
        case NamedFamily::lucas: return lucas(n);
        case NamedFamily::vertex_deleted: return vertex_deleted(n);
        case NamedFamily::bipartite_wheel: return bipartite_wheel(n);
        case NamedFamily::run_free: return run_free(n, k);
    }
    throw std::invalid_argument("make_family: unknown family");
}

} // namespace daisy
