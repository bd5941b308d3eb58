#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "daisy/census.hpp"
#include "daisy/family.hpp"
#include "daisy/poly.hpp"
#include "daisy/word.hpp"

namespace daisy {

/// Outcome of one machine check on one concrete instance.  A failing report
/// always carries a witness that can be re-checked by hand.
struct CheckReport {
    std::string check;
    std::string instance;
    bool pass = false;
    std::string witness;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

namespace detail {

inline CheckReport passed(std::string check, std::string instance, std::string note = "") {
    return {std::move(check), std::move(instance), true, std::move(note)};
}

inline CheckReport failed(std::string check, std::string instance, std::string witness) {
    return {std::move(check), std::move(instance), false, std::move(witness)};
}

inline Bigint pow2(int n) {
    Bigint r{1};
    const Bigint two{2};
    for (int i = 0; i < n; ++i) r *= two;
    return r;
}

} // namespace detail

/// Isometry check: the graph induced by V sits in the cube with its geodesic
/// distances equal to Hamming distances, over all vertex pairs.
inline CheckReport check_partial_cube(const VertexSet& V, std::string instance = "") {
    const std::string name = "partial-cube";
    for (Word u : V) {
        DistanceIndex dist = bfs_distances(V, u);
        for (Word v : V) {
            auto d = dist.distance(v);
            const int h = hamming(u, v);
            if (!d.has_value())
                return detail::failed(name, instance,
                                      "u=" + to_string(u) + " v=" + to_string(v) +
                                          " bfs=unreachable hamming=" + std::to_string(h));
            if (*d != h)
                return detail::failed(name, instance, "u=" + to_string(u) + " v=" + to_string(v) +
                                                          " bfs=" + std::to_string(*d) +
                                                          " hamming=" + std::to_string(h));
        }
    }
    return detail::passed(name, std::move(instance));
}

/// The distance polynomial at the center equals the cube polynomial at the
/// shifted sum argument: D(x,y) = C(x+y-1), both sides from independent
/// censuses (BFS-based for D, distance-blind enumeration for C).
inline CheckReport check_d_from_c(const DaisyCube& G, std::string instance = "", int threads = 1) {
    const std::string name = "d-from-c";
    if (G.empty()) return detail::passed(name, std::move(instance), "empty graph, both sides zero");
    const BiPoly D = distance_poly(census_oracle(G.vertices(), Word::zero(G.length()), threads));
    const UniPoly C = cube_poly(G.vertices());
    const BiPoly rhs = substitute_shift(C, -1);
    if (D == rhs) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance),
                          "D=" + to_string(D) + " C(x+y-1)=" + to_string(rhs));
}

/// The center census reads the same with dimension and distance exchanged.
inline CheckReport check_symmetry(const DaisyCube& G, std::string instance = "", int threads = 1) {
    const std::string name = "symmetry";
    if (G.empty()) return detail::passed(name, std::move(instance), "empty graph");
    const BiPoly D = distance_poly(census_daisy_fast(G, Word::zero(G.length()), threads));
    if (swap_vars(D) == D) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance), "D=" + to_string(D));
}

/// Informational only: whether the census at an arbitrary anchor happens to
/// be symmetric.  Never a failure; off-center anchors are allowed to (and
/// generally do) come out asymmetric.
inline CheckReport check_symmetry_info(const DaisyCube& G, Word u, std::string instance = "",
                                       int threads = 1) {
    const BiPoly D = distance_poly(census_daisy_fast(G, u, threads));
    const bool sym = swap_vars(D) == D;
    return detail::passed("symmetry-offcenter", std::move(instance),
                          sym ? "symmetric=yes" : "symmetric=no");
}

/// Both reconstructions from the vertex-distance count: D(x,y) = W(x+y) and
/// C(x) = W(x+1), with W taken from the census itself.
inline CheckReport check_w_relations(const DaisyCube& G, std::string instance = "", int threads = 1) {
    const std::string name = "w-relations";
    if (G.empty()) return detail::passed(name, std::move(instance), "empty graph");
    const CubeCensus census = census_daisy_fast(G, Word::zero(G.length()), threads);
    const UniPoly W = weight_poly(census);
    const BiPoly D = distance_poly(census);
    const UniPoly C = cube_poly(census);
    if (D != substitute_sum(W))
        return detail::failed(name, instance, "D=" + to_string(D) + " W(x+y)=" + to_string(substitute_sum(W)));
    if (C != substitute_univariate_shift(W))
        return detail::failed(name, std::move(instance),
                              "C=" + to_string(C) + " W(x+1)=" + to_string(substitute_univariate_shift(W)));
    return detail::passed(name, std::move(instance));
}

/// Census W at the center against the known binomial closed form
/// (fibonacci, lucas and hypercube only).
inline CheckReport check_closed_form_w(const DaisyCube& G, NamedFamily family, int n,
                                       std::string instance = "", int threads = 1) {
    const std::string name = "w-closed-form";
    const UniPoly W = weight_poly(census_daisy_fast(G, Word::zero(G.length()), threads));
    const UniPoly closed = closed_form_W(family, n);
    if (W == closed) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance),
                          "census W=" + to_string(W) + " closed form=" + to_string(closed));
}

/// The tree-like evaluation: D(x,-x) collapses to the constant 1 at every
/// vertex of the daisy cube.
inline CheckReport check_tree_like(const DaisyCube& G, std::string instance = "", int threads = 1) {
    const std::string name = "tree-like";
    const UniPoly one = UniPoly::constant(Bigint{1});
    for (Word u : G.vertices()) {
        const UniPoly collapsed = substitute_neg(distance_poly(census_daisy_fast(G, u, threads)));
        if (collapsed != one)
            return detail::failed(name, std::move(instance),
                                  "u=" + to_string(u) + " D(x,-x)=" + to_string(collapsed));
    }
    return detail::passed(name, std::move(instance));
}

/// C(-1) = 1 for daisy cubes.
inline CheckReport check_cube_poly_minus1(const DaisyCube& G, std::string instance = "") {
    const std::string name = "c-minus1";
    const UniPoly C = cube_poly(G.vertices());
    const Bigint v = C.evaluate(Bigint{-1});
    if (v == Bigint{1}) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance), "C(-1)=" + v.str());
}

/// Multiplicativity over the Cartesian product at a chosen anchor pair.
inline CheckReport check_product(const DaisyCube& G, const DaisyCube& H, Word g, Word h,
                                 std::string instance = "", int threads = 1) {
    const std::string name = "product";
    if (!G.contains(g) || !H.contains(h))
        throw std::invalid_argument("check_product: anchors must lie in the factors");
    const DaisyCube P = cartesian_product(G, H);
    const Word anchor = Word::from_bits(P.length(), (g.bits() << H.length()) | h.bits());
    const BiPoly left = distance_poly(census_daisy_fast(P, anchor, threads));
    const BiPoly right = distance_poly(census_daisy_fast(G, g, threads)) *
                         distance_poly(census_daisy_fast(H, h, threads));
    if (left == right) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance),
                          "product D=" + to_string(left) + " factor product=" + to_string(right));
}

/// For the full subcube below b and an arbitrary anchor word u (inside or
/// outside), D(x,-x) = (-x)^delta with delta the Hamming distance from u to
/// the subcube.
inline CheckReport check_external_anchor(Word b, Word u, std::string instance = "") {
    const std::string name = "external-anchor";
    const UniPoly collapsed = substitute_neg(distance_poly(census_interval_external(b, u)));
    const int delta = std::popcount(u.bits() & ~b.bits());
    UniPoly expected;
    expected.add_term(delta, delta % 2 == 0 ? Bigint{1} : Bigint{-1});
    if (collapsed == expected) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance),
                          "D(x,-x)=" + to_string(collapsed) + " expected=" + to_string(expected));
}

/// Kleitman's correlation inequality for two downward-closed sets, checked
/// with exact cross-multiplication.
inline CheckReport check_kleitman(const GeneratorSet& X, const GeneratorSet& Y,
                                  std::string instance = "") {
    const std::string name = "kleitman";
    if (X.length() != Y.length())
        throw std::invalid_argument("check_kleitman: generator sets of different lengths");
    const DaisyCube Gx = downward_closure(X);
    const DaisyCube Gy = downward_closure(Y);
    const auto& a = Gx.vertices().raw();
    const auto& b = Gy.vertices().raw();
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    const Bigint lhs = Bigint::from_u64(common) * detail::pow2(X.length());
    const Bigint rhs = Bigint::from_u64(a.size()) * Bigint::from_u64(b.size());
    if (lhs >= rhs) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance),
                          "|X&Y|*2^n=" + lhs.str() + " < |X|*|Y|=" + rhs.str());
}

/// Recentering by t is an automorphism of the cube, so the census is carried
/// over unchanged once the anchor is relabeled alongside.
inline CheckReport check_recenter(const VertexSet& V, Word t, Word u, std::string instance = "",
                                  int threads = 1) {
    const std::string name = "recenter";
    if (!V.contains(u)) throw std::invalid_argument("check_recenter: anchor not in vertex set");
    const CubeCensus before = census_oracle(V, u, threads);
    const CubeCensus after = census_oracle(recenter(V, t), u ^ t, threads);
    if (before.counts() == after.counts()) return detail::passed(name, std::move(instance));
    return detail::failed(name, std::move(instance), "census changed under recentering by " + to_string(t));
}

/// Scope of the built-in check matrix.
struct SuiteOptions {
    int max_n = 8;
    std::uint64_t seed = 0x5eed;
    int random_instances = 25;
    int threads = 1;
};

namespace detail {

inline std::string family_instance(NamedFamily f, int n) {
    return "family=" + std::string(family_name(f)) + " n=" + std::to_string(n);
}

inline void run_daisy_checks(std::vector<CheckReport>& out, const DaisyCube& G,
                             const std::string& instance, int pair_check_max_n, int threads) {
    if (G.length() <= pair_check_max_n) out.push_back(check_partial_cube(G.vertices(), instance));
    out.push_back(check_d_from_c(G, instance, threads));
    out.push_back(check_symmetry(G, instance, threads));
    out.push_back(check_w_relations(G, instance, threads));
    out.push_back(check_tree_like(G, instance, threads));
    out.push_back(check_cube_poly_minus1(G, instance));
}

// plain modulo on the raw engine: bit-identical draws on every toolchain
inline GeneratorSet random_generators(std::mt19937_64& rng, int n, int max_count) {
    const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_count));
    std::vector<std::uint64_t> words;
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int i = 0; i < count; ++i) words.push_back(rng() & mask);
    return GeneratorSet(n, std::move(words));
}

} // namespace detail

/// The built-in verification matrix: every identity on the named families up
/// to max_n, on seeded random closures, on small products, on subcube
/// external anchors, on Kleitman pairs, plus the negative controls (which
/// pass when the underlying check fails as it should).
inline std::vector<CheckReport> run_identity_suite(const SuiteOptions& opt = {}) {
    std::vector<CheckReport> out;
    const int threads = opt.threads;

    // named families
    for (int n = 1; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, hypercube(n), detail::family_instance(NamedFamily::hypercube, n), 8, threads);
    for (int n = 0; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, fibonacci(n), detail::family_instance(NamedFamily::fibonacci, n), 8, threads);
    for (int n = 0; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, lucas(n), detail::family_instance(NamedFamily::lucas, n), 8, threads);
    for (int n = 1; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, vertex_deleted(n), detail::family_instance(NamedFamily::vertex_deleted, n), 8, threads);
    for (int n = 3; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, bipartite_wheel(n), detail::family_instance(NamedFamily::bipartite_wheel, n), 8, threads);
    for (int n = 1; n <= opt.max_n; ++n)
        detail::run_daisy_checks(out, run_free(n, 3), detail::family_instance(NamedFamily::run_free, n) + " k=3", 8, threads);

    // closed forms where one is known
    for (int n = 1; n <= opt.max_n; ++n) {
        out.push_back(check_closed_form_w(fibonacci(n), NamedFamily::fibonacci, n,
                                          detail::family_instance(NamedFamily::fibonacci, n), threads));
        out.push_back(check_closed_form_w(lucas(n), NamedFamily::lucas, n,
                                          detail::family_instance(NamedFamily::lucas, n), threads));
        out.push_back(check_closed_form_w(hypercube(n), NamedFamily::hypercube, n,
                                          detail::family_instance(NamedFamily::hypercube, n), threads));
    }

    // seeded random closures
    {
        std::mt19937_64 rng(opt.seed);
        for (int i = 0; i < opt.random_instances; ++i) {
            const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_n));
            const GeneratorSet X = detail::random_generators(rng, n, 20);
            const DaisyCube G = downward_closure(X);
            const std::string instance =
                "random i=" + std::to_string(i) + " n=" + std::to_string(n) +
                " seed=" + std::to_string(opt.seed) + " |X|=" + std::to_string(X.size());
            detail::run_daisy_checks(out, G, instance, 8, threads);
        }
    }

    // products at every anchor pair of a small factor pool
    {
        const std::vector<std::pair<std::string, DaisyCube>> pool = {
            {"hypercube(1)", hypercube(1)}, {"hypercube(2)", hypercube(2)},
            {"fibonacci(2)", fibonacci(2)}, {"fibonacci(3)", fibonacci(3)},
            {"lucas(3)", lucas(3)},
        };
        for (const auto& [gname, G] : pool)
            for (const auto& [hname, H] : pool)
                for (Word g : G.vertices())
                    for (Word h : H.vertices())
                        out.push_back(check_product(G, H, g, h,
                                                    "product " + gname + " x " + hname + " anchors=(" +
                                                        to_string(g) + "," + to_string(h) + ")",
                                                    threads));
    }

    // external anchors over full subcubes
    for (int n = 1; n <= std::min(4, opt.max_n); ++n) {
        const std::uint64_t top = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t b = 0; b <= top; ++b)
            for (std::uint64_t u = 0; u <= top; ++u)
                out.push_back(check_external_anchor(Word::from_bits(n, b), Word::from_bits(n, u),
                                                    "n=" + std::to_string(n) + " b=" +
                                                        to_string(Word::from_bits(n, b)) + " u=" +
                                                        to_string(Word::from_bits(n, u))));
    }

    // Kleitman pairs
    {
        std::mt19937_64 rng(opt.seed + 1);
        for (int i = 0; i < opt.random_instances; ++i) {
            const int n = opt.max_n;
            const GeneratorSet X = detail::random_generators(rng, n, 20);
            const GeneratorSet Y = detail::random_generators(rng, n, 20);
            out.push_back(check_kleitman(X, Y, "random pair i=" + std::to_string(i) + " n=" +
                                                   std::to_string(n) + " seed=" + std::to_string(opt.seed + 1)));
        }
    }

    // recentering
    {
        std::mt19937_64 rng(opt.seed + 2);
        const DaisyCube G = fibonacci(std::min(6, std::max(1, opt.max_n)));
        const int n = G.length();
        for (int i = 0; i < 5; ++i) {
            const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
            const Word t = Word::from_bits(n, rng() & mask);
            const Word u = G.vertices().at(rng() % G.vertices().size());
            out.push_back(check_recenter(G.vertices(), t, u,
                                         "fibonacci(" + std::to_string(n) + ") t=" + to_string(t) +
                                             " u=" + to_string(u),
                                         threads));
        }
    }

    // negative controls: these pass exactly when the underlying check fails
    {
        const VertexSet bad(3, {0b000, 0b100, 0b110, 0b111, 0b011});
        CheckReport sub = check_partial_cube(bad, "crafted non-isometric 5-vertex set");
        CheckReport control;
        control.check = "partial-cube-negative-control";
        control.instance = sub.instance;
        control.pass = !sub.pass && !sub.witness.empty();
        control.witness = sub.witness;
        out.push_back(control);

        const DaisyCube q3m = vertex_deleted(3);
        for (const char* anchor : {"100", "110"}) {
            CheckReport info = check_symmetry_info(q3m, Word::parse(anchor),
                                                   "family=vertex-deleted n=3 anchor=" + std::string(anchor));
            CheckReport ctl;
            ctl.check = "symmetry-offcenter-control";
            ctl.instance = info.instance;
            ctl.pass = info.witness == "symmetric=no";
            ctl.witness = info.witness;
            out.push_back(ctl);
        }
    }

    return out;
}

} // namespace daisy
