#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "daisy/daisy.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int threads_from_env() {
    const char* env = std::getenv("DAISY_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

struct InstanceOptions {
    std::string family;
    std::string generators_path;
    std::string vertices_path;
    int n = -1;
    int k = 2;

    void add_flags(CLI::App* cmd, bool with_vertices) {
        cmd->add_option("--family", family, "named family: hypercube, fibonacci, lucas, vertex-deleted, bipartite-wheel, run-free");
        cmd->add_option("--generators", generators_path, "generator-set file (closed and antichain-reduced on load)");
        if (with_vertices)
            cmd->add_option("--vertices", vertices_path, "raw vertex-set file, taken literally (no closure)");
        cmd->add_option("--n", n, "word length for --family");
        cmd->add_option("--k", k, "forbidden run length for run-free (default 2)");
    }

    bool has_family() const { return !family.empty(); }
    bool has_generators() const { return !generators_path.empty(); }
    bool has_vertices() const { return !vertices_path.empty(); }
};

daisy::DaisyCube load_cube(const InstanceOptions& in) {
    const int sources = int(in.has_family()) + int(in.has_generators()) + int(in.has_vertices());
    if (sources != 1)
        throw std::invalid_argument("give exactly one input source: --family, --generators or --vertices");
    if (in.has_family()) {
        auto f = daisy::family_from_name(in.family);
        if (!f) throw std::invalid_argument("unknown family '" + in.family + "'");
        if (in.n < 0) throw std::invalid_argument("--family requires --n");
        return daisy::make_family(*f, in.n, in.k);
    }
    if (in.has_generators())
        return daisy::downward_closure(daisy::read_vertex_set_file(in.generators_path));
    // raw vertices: accepted when they do form a daisy cube
    return daisy::DaisyCube::from_closed(daisy::read_vertex_set_file(in.vertices_path));
}

std::string instance_label(const InstanceOptions& in) {
    if (in.has_family()) {
        std::string s = "family=" + in.family + " n=" + std::to_string(in.n);
        if (in.family == "run-free" || in.family == "run_free") s += " k=" + std::to_string(in.k);
        return s;
    }
    if (in.has_generators()) return "generators=" + in.generators_path;
    return "vertices=" + in.vertices_path;
}

// ---------------------------------------------------------------- build ----

struct BuildOptions {
    InstanceOptions input;
    std::string out_path;
};

int run_build(const BuildOptions& opt) {
    const daisy::DaisyCube cube = load_cube(opt.input);
    if (cube.empty()) std::cerr << "warning: empty vertex set\n";
    if (cube.length() == 0)
        throw std::invalid_argument("vertex-set files cannot carry length-0 words");
    if (!opt.out_path.empty())
        daisy::write_vertex_set_file(opt.out_path, cube.vertices(), &cube.maximal());
    else
        daisy::write_vertex_set(std::cout, cube.vertices(), &cube.maximal());
    std::cout << "|V|=" << cube.vertices().size() << " |E|=" << daisy::edge_count(cube.vertices())
              << " |Xhat|=" << cube.maximal().size() << "\n";
    return 0;
}

// --------------------------------------------------------------- census ----

struct CensusOptions {
    InstanceOptions input;
    std::string anchor;
    std::string engine; // oracle | fast | both | "" (auto)
    std::string format = "text";
    std::string out_prefix;
};

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

int run_census(const CensusOptions& opt) {
    const int threads = threads_from_env();
    const daisy::DaisyCube cube = load_cube(opt.input);
    if (cube.empty()) throw std::invalid_argument("census needs a nonempty graph");
    const daisy::Word anchor =
        opt.anchor.empty() ? daisy::Word::zero(cube.length()) : daisy::Word::parse(opt.anchor);
    if (anchor.length() != cube.length())
        throw std::invalid_argument("anchor length " + std::to_string(anchor.length()) +
                                    " does not match word length " + std::to_string(cube.length()));
    if (!cube.contains(anchor))
        throw std::invalid_argument("anchor " + daisy::to_string(anchor) + " is not a vertex of the graph");

    std::string engine = opt.engine;
    if (engine.empty()) engine = cube.length() <= 8 ? "both" : "fast";
    if (engine != "oracle" && engine != "fast" && engine != "both")
        throw std::invalid_argument("--engine must be oracle, fast or both");

    daisy::CubeCensus census;
    bool agreed = true;
    if (engine == "oracle") {
        census = daisy::census_oracle(cube.vertices(), anchor, threads);
    } else if (engine == "fast") {
        census = daisy::census_daisy_fast(cube, anchor, threads);
    } else {
        census = daisy::census_daisy_fast(cube, anchor, threads);
        agreed = census == daisy::census_oracle(cube.vertices(), anchor, threads);
    }

    const daisy::BiPoly D = daisy::distance_poly(census);
    const daisy::UniPoly C = daisy::cube_poly(census);
    const daisy::UniPoly W = daisy::weight_poly(census);
    const std::string label = instance_label(opt.input) + " anchor=" + daisy::to_string(anchor);

    if (opt.format == "json") {
        json doc{{"instance", label},
                 {"engine", engine},
                 {"agreement", engine == "both" ? json(agreed) : json()},
                 {"D", daisy::to_json(D)},
                 {"C", daisy::to_json(C)},
                 {"W", daisy::to_json(W)}};
        json rows = json::array();
        for (const auto& [kd, c] : census.counts())
            rows.push_back({{"k", kd.first}, {"d", kd.second}, {"count", c}});
        doc["census"] = rows;
        if (!opt.out_prefix.empty()) {
            write_text_file(opt.out_prefix + ".census.csv", daisy::census_csv(census));
            write_text_file(opt.out_prefix + ".census.json", doc.dump(2) + "\n");
            std::cout << "wrote " << opt.out_prefix << ".census.csv, .census.json\n";
        } else {
            std::cout << doc.dump(2) << "\n";
        }
    } else if (opt.format == "text") {
        std::ostringstream head;
        head << "# " << label << " engine=" << engine;
        if (engine == "both") head << " agreement=" << (agreed ? "yes" : "NO");
        head << "\n";
        if (!opt.out_prefix.empty()) {
            write_text_file(opt.out_prefix + ".census.csv", daisy::census_csv(census));
            write_text_file(opt.out_prefix + ".D.txt", daisy::to_string(D) + "\n");
            write_text_file(opt.out_prefix + ".C.txt", daisy::to_string(C) + "\n");
            write_text_file(opt.out_prefix + ".W.txt", daisy::to_string(W) + "\n");
            std::cout << head.str() << "wrote " << opt.out_prefix << ".census.csv, .D.txt, .C.txt, .W.txt\n";
        } else {
            std::cout << head.str() << daisy::census_csv(census) << "D = " << daisy::to_string(D)
                      << "\nC = " << daisy::to_string(C) << "\nW = " << daisy::to_string(W) << "\n";
        }
    } else {
        throw std::invalid_argument("--format must be text or json");
    }

    if (!agreed) {
        std::cerr << "FAIL: oracle and fast-path censuses disagree\n";
        return 1;
    }
    return 0;
}

// --------------------------------------------------------------- series ----

struct SeriesOptions {
    std::string family;
    int m = 10;
    std::string format = "text";
    std::string out_path;
};

int run_series(const SeriesOptions& opt) {
    if (opt.m < 0 || opt.m > 30) throw std::invalid_argument("--m must be in 0..30");
    auto fam = daisy::family_from_name(opt.family);
    if (!fam || (*fam != daisy::NamedFamily::hypercube && *fam != daisy::NamedFamily::fibonacci &&
                 *fam != daisy::NamedFamily::lucas))
        throw std::invalid_argument("series supports hypercube, fibonacci and lucas");

    std::vector<daisy::UniPoly> f, g;
    std::vector<daisy::BiPoly> h;
    bool rational = true;
    if (auto fs_ = daisy::weight_series(*fam)) {
        f = daisy::series_coefficients(*fs_, opt.m);
        g = daisy::series_coefficients(daisy::cube_series_from(*fs_), opt.m);
        h = daisy::series_coefficients(daisy::distance_series_from(*fs_), opt.m);
    } else {
        // no rational form known: per-member closed forms
        rational = false;
        for (int n = 0; n <= opt.m; ++n) {
            f.push_back(daisy::weight_closed_form_or_k1(*fam, n));
            g.push_back(daisy::substitute_univariate_shift(f.back()));
            h.push_back(daisy::substitute_sum(f.back()));
        }
    }

    bool cross_ok = true;
    for (int n = 0; n <= opt.m; ++n) {
        if (daisy::substitute_univariate_shift(f[n]) != g[n]) cross_ok = false;
        if (daisy::substitute_sum(f[n]) != h[n]) cross_ok = false;
    }

    std::ostringstream out;
    if (opt.format == "json") {
        json doc{{"family", std::string(daisy::family_name(*fam))},
                 {"m", opt.m},
                 {"rational_form", rational},
                 {"cross_check", cross_ok}};
        json jf = json::array(), jg = json::array(), jh = json::array();
        for (int n = 0; n <= opt.m; ++n) {
            jf.push_back(daisy::to_json(f[n]));
            jg.push_back(daisy::to_json(g[n]));
            jh.push_back(daisy::to_json(h[n]));
        }
        doc["W"] = jf;
        doc["C"] = jg;
        doc["D"] = jh;
        out << doc.dump(2) << "\n";
    } else if (opt.format == "text") {
        out << "# family=" << daisy::family_name(*fam) << " m=" << opt.m
            << (rational ? "" : " (per-member closed form; no rational form asserted)") << "\n";
        for (int n = 0; n <= opt.m; ++n) out << "W[" << n << "] = " << daisy::to_string(f[n]) << "\n";
        for (int n = 0; n <= opt.m; ++n) out << "C[" << n << "] = " << daisy::to_string(g[n]) << "\n";
        for (int n = 0; n <= opt.m; ++n) out << "D[" << n << "] = " << daisy::to_string(h[n]) << "\n";
        out << "# cross-check C=W(x+1), D=W(x+y): " << (cross_ok ? "ok" : "FAIL") << "\n";
    } else {
        throw std::invalid_argument("--format must be text or json");
    }

    if (!opt.out_path.empty()) {
        write_text_file(opt.out_path, out.str());
        std::cout << "wrote " << opt.out_path << "\n";
    } else {
        std::cout << out.str();
    }
    return cross_ok ? 0 : 1;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::string suite;
    std::string check;
    InstanceOptions input;
    std::string anchor;
    int max_n = 8;
    std::uint64_t seed = 0x5eed;
    int random_count = 25;
    std::string format = "text";
};

std::vector<daisy::CheckReport> run_single_check(const VerifyOptions& opt) {
    const int threads = threads_from_env();
    const std::string label = instance_label(opt.input);
    if (opt.check == "partial-cube") {
        // raw vertex files stay literal here so non-isometric sets can be probed
        daisy::VertexSet V = opt.input.has_vertices()
                                 ? daisy::read_vertex_set_file(opt.input.vertices_path)
                                 : load_cube(opt.input).vertices();
        return {daisy::check_partial_cube(V, label)};
    }
    const daisy::DaisyCube cube = load_cube(opt.input);
    if (opt.check == "d-from-c") return {daisy::check_d_from_c(cube, label, threads)};
    if (opt.check == "symmetry") {
        if (!opt.anchor.empty()) {
            const daisy::Word u = daisy::Word::parse(opt.anchor);
            return {daisy::check_symmetry_info(cube, u, label + " anchor=" + opt.anchor, threads)};
        }
        return {daisy::check_symmetry(cube, label, threads)};
    }
    if (opt.check == "w-relations") return {daisy::check_w_relations(cube, label, threads)};
    if (opt.check == "tree-like") return {daisy::check_tree_like(cube, label, threads)};
    if (opt.check == "c-minus1") return {daisy::check_cube_poly_minus1(cube, label)};
    throw std::invalid_argument(
        "unknown check '" + opt.check +
        "' (one of: partial-cube, d-from-c, symmetry, w-relations, tree-like, c-minus1)");
}

int run_verify(const VerifyOptions& opt) {
    if (opt.suite.empty() == opt.check.empty())
        throw std::invalid_argument("give exactly one of --suite or --check");
    std::vector<daisy::CheckReport> reports;
    if (!opt.suite.empty()) {
        if (opt.suite != "paper" && opt.suite != "full")
            throw std::invalid_argument("unknown suite '" + opt.suite + "' (use: paper)");
        if (opt.max_n < 1 || opt.max_n > 12) throw std::invalid_argument("--max-n must be in 1..12");
        daisy::SuiteOptions so;
        so.max_n = opt.max_n;
        so.seed = opt.seed;
        so.random_instances = opt.random_count;
        so.threads = threads_from_env();
        reports = daisy::run_identity_suite(so);
    } else {
        reports = run_single_check(opt);
    }

    std::size_t failures = 0;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            arr.push_back(daisy::to_json(r));
            if (!r.pass) ++failures;
        }
        std::cout << arr.dump(2) << "\n";
    } else if (opt.format == "text") {
        for (const auto& r : reports) {
            std::cout << daisy::report_line(r) << "\n";
            if (!r.pass) ++failures;
        }
        std::cout << "# checks=" << reports.size() << " failures=" << failures << "\n";
    } else {
        throw std::invalid_argument("--format must be text or json");
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"daisy cubes: build hypercube-derived families, census their induced subcubes,\n"
                 "expand counting-polynomial generating functions, and verify the identities"};
    app.require_subcommand(1);

    BuildOptions build_opt;
    auto* build_cmd = app.add_subcommand("build", "construct a vertex set and its maximal antichain");
    build_opt.input.add_flags(build_cmd, false);
    build_cmd->add_option("--out", build_opt.out_path, "write the vertex-set file here (default: stdout)");

    CensusOptions census_opt;
    auto* census_cmd = app.add_subcommand("census", "count induced subcubes by dimension and distance");
    census_opt.input.add_flags(census_cmd, false);
    census_cmd->add_option("--anchor", census_opt.anchor, "anchor word (default: the all-zeros word)");
    census_cmd->add_option("--engine", census_opt.engine,
                           "oracle | fast | both (default: both up to n=8, fast beyond)");
    census_cmd->add_option("--format", census_opt.format, "text | json (default text)");
    census_cmd->add_option("--out", census_opt.out_prefix, "output file prefix (default: stdout)");

    SeriesOptions series_opt;
    auto* series_cmd = app.add_subcommand("series", "per-n counting polynomials of a family");
    series_cmd->add_option("--family", series_opt.family, "hypercube | fibonacci | lucas")->required();
    series_cmd->add_option("--m", series_opt.m, "expand through z^m (default 10, max 30)");
    series_cmd->add_option("--format", series_opt.format, "text | json (default text)");
    series_cmd->add_option("--out", series_opt.out_path, "write here (default: stdout)");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the identities; exit 0 iff all pass");
    verify_cmd->add_option("--suite", verify_opt.suite, "run the built-in matrix (name: paper)");
    verify_cmd->add_option("--check", verify_opt.check,
                           "single check: partial-cube, d-from-c, symmetry, w-relations, tree-like, c-minus1");
    verify_opt.input.add_flags(verify_cmd, true);
    verify_cmd->add_option("--anchor", verify_opt.anchor, "anchor for the informational symmetry check");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "suite: largest word length (default 8)");
    verify_cmd->add_option("--seed", verify_opt.seed, "suite: random-instance seed");
    verify_cmd->add_option("--random-count", verify_opt.random_count,
                           "suite: number of random closures (default 25)");
    verify_cmd->add_option("--format", verify_opt.format, "text | json (default text)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build_cmd) return run_build(build_opt);
        if (*census_cmd) return run_census(census_opt);
        if (*series_cmd) return run_series(series_opt);
        if (*verify_cmd) return run_verify(verify_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
