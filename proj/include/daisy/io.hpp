#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "daisy/census.hpp"
#include "daisy/family.hpp"
#include "daisy/poly.hpp"
#include "daisy/verify.hpp"
#include "daisy/word.hpp"

namespace daisy {

/// Vertex-set file: one 0/1 word per line, uniform length; lines whose first
/// non-blank character is '#' are comments; blank lines are ignored.
inline VertexSet read_vertex_set(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    int n = -1;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t stop = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(start, stop - start + 1);
        Word w = [&] {
            try {
                return Word::parse(token);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (n == -1) n = w.length();
        if (w.length() != n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": word of length " +
                                        std::to_string(w.length()) + " in a file of length " +
                                        std::to_string(n) + " words");
        words.push_back(w);
    }
    if (n == -1) throw std::invalid_argument("vertex-set file contains no words");
    return VertexSet::from_words(n, words);
}

inline VertexSet read_vertex_set_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return read_vertex_set(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

/// Writes words in canonical order; the maximal antichain, when given, rides
/// along as comment lines so the file stays a valid generator input.
inline void write_vertex_set(std::ostream& out, const VertexSet& V, const VertexSet* maximal = nullptr) {
    out << "# n " << V.length() << "\n";
    out << "# vertices " << V.size() << "\n";
    if (maximal) {
        out << "# maximal " << maximal->size() << "\n";
        for (Word w : *maximal) out << "# maximal-vertex " << to_string(w) << "\n";
    }
    for (Word w : V) out << to_string(w) << "\n";
}

inline void write_vertex_set_file(const std::filesystem::path& path, const VertexSet& V,
                                  const VertexSet* maximal = nullptr) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_vertex_set(out, V, maximal);
}

inline nlohmann::json to_json(const UniPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [d, c] : p.terms()) terms.push_back({{"x", d}, {"coeff", c.str()}});
    return {{"vars", {"x"}}, {"terms", terms}};
}

inline nlohmann::json to_json(const BiPoly& p) {
    std::vector<std::pair<std::pair<int, int>, Bigint>> sorted(p.terms().begin(), p.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [kd, c] : sorted)
        terms.push_back({{"x", kd.first}, {"y", kd.second}, {"coeff", c.str()}});
    return {{"vars", {"x", "y"}}, {"terms", terms}};
}

/// Census table, rows sorted by (k, d).
inline std::string census_csv(const CubeCensus& census) {
    std::ostringstream out;
    out << "k,d,count\n";
    for (const auto& [kd, c] : census.counts())
        out << kd.first << "," << kd.second << "," << c << "\n";
    return out.str();
}

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j{{"check", r.check},
                     {"instance", r.instance},
                     {"verdict", r.pass ? "pass" : "fail"}};
    j["witness"] = r.witness.empty() ? nlohmann::json() : nlohmann::json(r.witness);
    return j;
}

inline std::string report_line(const CheckReport& r) {
    std::string line = (r.pass ? "pass | " : "FAIL | ") + r.check + " | " + r.instance;
    if (!r.witness.empty()) line += " | " + r.witness;
    return line;
}

} // namespace daisy
