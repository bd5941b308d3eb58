#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "daisy/family.hpp"
#include "daisy/poly.hpp"
#include "daisy/word.hpp"

namespace daisy {

/// An induced subcube of the hypercube: the base vertex plus the set of free
/// coordinates.  The top vertex is base | mask and the dimension is
/// weight(mask); base and mask never overlap.
struct CubeHandle {
    Word base;
    Word mask;

    Word top() const { return base | mask; }
    int dim() const { return weight(mask); }

    friend bool operator==(const CubeHandle&, const CubeHandle&) = default;
};

/// Sparse table of counts c[k][d]: induced k-cubes at graph distance d from
/// the anchor vertex.  Counts are machine words; any enumeration small enough
/// to finish stays far below 2^64.
class CubeCensus {
public:
    CubeCensus() = default;
    explicit CubeCensus(Word anchor) : anchor_(anchor) {}

    Word anchor() const { return anchor_; }
    int length() const { return anchor_.length(); }

    void add(int k, int d, std::uint64_t c = 1) {
        if (c == 0) return;
        counts_[{k, d}] += c;
    }

    std::uint64_t at(int k, int d) const {
        auto it = counts_.find({k, d});
        return it == counts_.end() ? 0 : it->second;
    }

    const std::map<std::pair<int, int>, std::uint64_t>& counts() const { return counts_; }

    friend bool operator==(const CubeCensus&, const CubeCensus&) = default;

private:
    Word anchor_;
    std::map<std::pair<int, int>, std::uint64_t> counts_;
};

/// Geodesic distances from an anchor inside an induced subgraph of the cube.
/// Lookup yields nothing for non-members and for members in other components.
class DistanceIndex {
public:
    DistanceIndex() = default;

    Word anchor() const { return anchor_; }

    std::optional<int> distance(Word w) const {
        if (w.length() != n_) return std::nullopt;
        auto it = std::lower_bound(keys_.begin(), keys_.end(), w.bits());
        if (it == keys_.end() || *it != w.bits()) return std::nullopt;
        std::int32_t d = dist_[static_cast<std::size_t>(it - keys_.begin())];
        if (d < 0) return std::nullopt;
        return static_cast<int>(d);
    }

private:
    Word anchor_;
    int n_ = 0;
    std::vector<std::uint64_t> keys_;
    std::vector<std::int32_t> dist_;

    friend DistanceIndex bfs_distances(const VertexSet&, Word);
};

namespace detail {

constexpr std::int32_t k_missing = -2;
constexpr std::int32_t k_unreached = -1;

/// Membership plus BFS distance, dense when the full cube fits comfortably.
struct DistMap {
    int n = 0;
    bool dense = false;
    std::vector<std::int32_t> grid;
    std::unordered_map<std::uint64_t, std::int32_t> map;

    std::int32_t get(std::uint64_t w) const {
        if (dense) return grid[w];
        auto it = map.find(w);
        return it == map.end() ? k_missing : it->second;
    }

    void set(std::uint64_t w, std::int32_t d) {
        if (dense)
            grid[w] = d;
        else
            map[w] = d;
    }
};

inline DistMap make_dist_map(const VertexSet& V, Word u) {
    DistMap dm;
    dm.n = V.length();
    dm.dense = dm.n <= 20;
    if (dm.dense) {
        dm.grid.assign(std::size_t{1} << dm.n, k_missing);
        for (std::uint64_t w : V.raw()) dm.grid[w] = k_unreached;
    } else {
        dm.map.reserve(V.size() * 2);
        for (std::uint64_t w : V.raw()) dm.map[w] = k_unreached;
    }
    // BFS by single-bit flips restricted to members
    std::vector<std::uint64_t> queue;
    queue.reserve(V.size());
    queue.push_back(u.bits());
    dm.set(u.bits(), 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t w = queue[head];
        const std::int32_t dw = dm.get(w);
        for (int b = 0; b < dm.n; ++b) {
            const std::uint64_t v = w ^ (std::uint64_t{1} << b);
            if (dm.get(v) == k_unreached) {
                dm.set(v, dw + 1);
                queue.push_back(v);
            }
        }
    }
    return dm;
}

/// Plain membership test, dense when cheap.
struct Membership {
    int n = 0;
    bool dense = false;
    std::vector<std::uint64_t> bitmap;
    const std::vector<std::uint64_t>* sorted = nullptr;

    explicit Membership(const VertexSet& V) : n(V.length()), sorted(&V.raw()) {
        dense = n <= 22;
        if (dense) {
            bitmap.assign((std::size_t{1} << n) / 64 + 1, 0);
            for (std::uint64_t w : V.raw()) bitmap[w >> 6] |= std::uint64_t{1} << (w & 63);
        }
    }

    bool contains(std::uint64_t w) const {
        if (dense) return (bitmap[w >> 6] >> (w & 63)) & 1;
        return std::binary_search(sorted->begin(), sorted->end(), w);
    }
};

/// Run fn(first, last) over a partition of [0, size) on `threads` workers.
template <class Fn>
void parallel_ranges(std::size_t size, int threads, Fn&& fn) {
    const int t = std::max(1, threads);
    if (t == 1 || size < 256) {
        fn(0, std::size_t{0}, size);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (size + t - 1) / t;
    for (int i = 0; i < t; ++i) {
        const std::size_t lo = std::min(size, i * chunk);
        const std::size_t hi = std::min(size, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// Per-worker counts.  The grid covers distances up to n, which is every
// distance a daisy cube can produce; geodesics of general induced subgraphs
// may be longer and land in the sparse overflow.
struct CountSink {
    int n = 0;
    std::vector<std::uint64_t> grid; // (n+1) x (n+1), index k*(n+1)+d
    std::map<std::pair<int, int>, std::uint64_t> overflow;

    explicit CountSink(int n_) : n(n_), grid(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0) {}

    void add(int k, int d) {
        if (d <= n)
            ++grid[static_cast<std::size_t>(k) * (n + 1) + d];
        else
            ++overflow[{k, d}];
    }
};

inline CubeCensus sinks_to_census(Word anchor, int n, const std::vector<CountSink>& sinks) {
    CubeCensus out(anchor);
    for (int k = 0; k <= n; ++k)
        for (int d = 0; d <= n; ++d) {
            std::uint64_t total = 0;
            for (const auto& s : sinks) total += s.grid[static_cast<std::size_t>(k) * (n + 1) + d];
            out.add(k, d, total);
        }
    for (const auto& s : sinks)
        for (const auto& [kd, c] : s.overflow) out.add(kd.first, kd.second, c);
    return out;
}

} // namespace detail

/// Geodesic distances from u in the subgraph induced by V.
inline DistanceIndex bfs_distances(const VertexSet& V, Word u) {
    if (!V.contains(u)) throw std::invalid_argument("bfs_distances: anchor not in vertex set");
    auto dm = detail::make_dist_map(V, u);
    DistanceIndex out;
    out.anchor_ = u;
    out.n_ = V.length();
    out.keys_ = V.raw();
    out.dist_.reserve(V.size());
    for (std::uint64_t w : V.raw()) out.dist_.push_back(dm.get(w));
    return out;
}

/// Visit every induced subcube of the subgraph induced by V exactly once
/// (0-cubes included).  Candidate tops are members; a candidate survives iff
/// all 2^k of its vertices are members.
template <class F>
void enumerate_cubes(const VertexSet& V, F&& visit) {
    const int n = V.length();
    detail::Membership member(V);
    for (std::uint64_t t : V.raw()) {
        std::uint64_t S = t;
        while (true) {
            const std::uint64_t base = t & ~S;
            bool ok = true;
            for (std::uint64_t s = S;; s = (s - 1) & S) {
                if (s != S && !member.contains(base | s)) {
                    ok = false;
                    break;
                }
                if (s == 0) break;
            }
            if (ok) visit(CubeHandle{Word::from_bits(n, base), Word::from_bits(n, S)});
            if (S == 0) break;
            S = (S - 1) & t;
        }
    }
}

/// Exhaustive census: BFS geodesics plus full member verification, correct
/// for any induced subgraph of the cube, isometric or not.  Cubes whose
/// vertices are all unreachable from u are not counted.
inline CubeCensus census_oracle(const VertexSet& V, Word u, int threads = 1) {
    if (!V.contains(u)) throw std::invalid_argument("census_oracle: anchor not in vertex set");
    const int n = V.length();
    const auto dm = detail::make_dist_map(V, u);
    const auto& raw = V.raw();
    std::vector<detail::CountSink> sinks(static_cast<std::size_t>(std::max(1, threads)),
                                         detail::CountSink(n));
    detail::parallel_ranges(raw.size(), threads, [&](int worker, std::size_t lo, std::size_t hi) {
        auto& sink = sinks[static_cast<std::size_t>(worker)];
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint64_t t = raw[i];
            std::uint64_t S = t;
            while (true) {
                const std::uint64_t base = t & ~S;
                std::int32_t best = detail::k_missing;
                bool ok = true;
                for (std::uint64_t s = S;; s = (s - 1) & S) {
                    const std::int32_t d = dm.get(base | s);
                    if (d == detail::k_missing) {
                        ok = false;
                        break;
                    }
                    if (d >= 0 && (best < 0 || d < best)) best = d;
                    if (s == 0) break;
                }
                if (ok && best >= 0) sink.add(std::popcount(S), best);
                if (S == 0) break;
                S = (S - 1) & t;
            }
        }
    });
    return detail::sinks_to_census(u, n, sinks);
}

/// Daisy-cube fast path: downward closedness makes every submask of a member
/// a member, so verification vanishes, and isometry turns the distance of a
/// cube from u into one popcount over the pinned coordinates.  Agrees with
/// census_oracle exactly on daisy cubes.
inline CubeCensus census_daisy_fast(const DaisyCube& G, Word u, int threads = 1) {
    if (!G.contains(u)) throw std::invalid_argument("census_daisy_fast: anchor not in vertex set");
    const int n = G.length();
    const std::uint64_t ub = u.bits();
    const auto& raw = G.vertices().raw();
    std::vector<detail::CountSink> sinks(static_cast<std::size_t>(std::max(1, threads)),
                                         detail::CountSink(n));
    detail::parallel_ranges(raw.size(), threads, [&](int worker, std::size_t lo, std::size_t hi) {
        // here d is a popcount over <= n pinned coordinates, so the grid is exact
        auto& grid = sinks[static_cast<std::size_t>(worker)].grid;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::uint64_t t = raw[i];
            std::uint64_t S = t;
            while (true) {
                const std::uint64_t base = t & ~S;
                const int d = std::popcount((ub ^ base) & ~S);
                ++grid[static_cast<std::size_t>(std::popcount(S)) * (n + 1) + d];
                if (S == 0) break;
                S = (S - 1) & t;
            }
        }
    });
    return detail::sinks_to_census(u, n, sinks);
}

/// Census of the full subcube below b, anchored at an arbitrary word u of the
/// same length; u need not belong to the subcube.  Distances are Hamming
/// distances in the ambient cube, which the gatedness of intervals makes
/// exact here.  Experimental outside this sub-hypercube setting.
inline CubeCensus census_interval_external(Word b, Word u) {
    require_same_length(b, u);
    if (weight(b) > 22) throw std::length_error("census_interval_external: subcube too large");
    const std::uint64_t ub = u.bits();
    CubeCensus out(u);
    std::uint64_t t = b.bits();
    while (true) {
        std::uint64_t S = t;
        while (true) {
            const std::uint64_t base = t & ~S;
            out.add(std::popcount(S), std::popcount((ub ^ base) & ~S));
            if (S == 0) break;
            S = (S - 1) & t;
        }
        if (t == 0) break;
        t = (t - 1) & b.bits();
    }
    return out;
}

/// One-variable cube count: coefficient k totals induced k-cubes.
inline UniPoly cube_poly(const CubeCensus& census) {
    UniPoly r;
    for (const auto& [kd, c] : census.counts()) r.add_term(kd.first, Bigint::from_u64(c));
    return r;
}

/// Distance-blind cube count straight from enumeration, with no anchor
/// anywhere in the computation.
inline UniPoly cube_poly(const VertexSet& V) {
    std::vector<std::uint64_t> by_dim(static_cast<std::size_t>(V.length()) + 1, 0);
    enumerate_cubes(V, [&](const CubeHandle& h) { ++by_dim[static_cast<std::size_t>(h.dim())]; });
    UniPoly r;
    for (std::size_t k = 0; k < by_dim.size(); ++k)
        r.add_term(static_cast<int>(k), Bigint::from_u64(by_dim[k]));
    return r;
}

/// Two-variable count: x tracks dimension, y tracks distance from the anchor.
inline BiPoly distance_poly(const CubeCensus& census) {
    BiPoly r;
    for (const auto& [kd, c] : census.counts()) r.add_term(kd.first, kd.second, Bigint::from_u64(c));
    return r;
}

/// Vertex-distance count: coefficient d totals vertices at distance d
/// (the k = 0 row of the census).
inline UniPoly weight_poly(const CubeCensus& census) {
    UniPoly r;
    for (const auto& [kd, c] : census.counts())
        if (kd.first == 0) r.add_term(kd.second, Bigint::from_u64(c));
    return r;
}

/// Closed-form distance-weight polynomial from the anchor 0^n, available for
/// the three families with a known binomial form.
inline UniPoly closed_form_W(NamedFamily family, int n) {
    if (n < 1) throw std::invalid_argument("closed_form_W: n must be >= 1");
    UniPoly r;
    switch (family) {
        case NamedFamily::fibonacci:
            for (int k = 0; k <= (n + 1) / 2; ++k) r.add_term(k, binomial(n - k + 1, k));
            return r;
        case NamedFamily::lucas:
            for (int k = 0; k <= n / 2; ++k)
                r.add_term(k, binomial(n - k, k) * Bigint{2} - binomial(n - k - 1, k));
            return r;
        case NamedFamily::hypercube:
            for (int k = 0; k <= n; ++k) r.add_term(k, binomial(n, k));
            return r;
        default:
            throw std::invalid_argument("closed_form_W: no closed form for this family");
    }
}

} // namespace daisy
