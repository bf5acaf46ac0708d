#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "constellation.hpp"
#include "core.hpp"
#include "generator.hpp"
#include "search.hpp"

namespace golay {

inline constexpr const char* kSpecFormat = "golay-spec/1";
inline constexpr const char* kSeqFormat = "golay-seq/1";
inline constexpr const char* kReportFormat = "golay-report/1";

namespace detail {
// Negative zero renders as plain 0; the sign of zero carries no meaning here
// and stable output strings matter more.
inline double unsign_zero(double x) { return x == 0.0 ? 0.0 : x; }
}  // namespace detail

// Display form "a+bi" with 12 significant digits. Machine formats (CSV/JSON)
// carry full double precision instead.
inline std::string format_complex_text(const cplx& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", detail::unsign_zero(z.real()),
                  detail::unsign_zero(z.imag()));
    return buf;
}

inline std::string format_csv_line(const cplx& z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", detail::unsign_zero(z.real()),
                  detail::unsign_zero(z.imag()));
    return buf;
}

// ---------------------------------------------------------------------------
// JSON bindings.

inline nlohmann::json complex_to_json(const cplx& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

inline cplx complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("json: complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json spec_to_json(const GeneratorSpec& spec) {
    nlohmann::json j;
    j["format"] = kSpecFormat;
    j["n"] = spec.n;
    j["perm"] = spec.perm.forward();
    j["matrices"] = nlohmann::json::array();
    for (const auto& u : spec.matrices)
        j["matrices"].push_back({{"c", complex_to_json(u.c)}, {"s", complex_to_json(u.s)}});
    j["r"] = spec.r;
    j["s"] = spec.s;
    return j;
}

inline GeneratorSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("spec json: not an object");
    if (!j.contains("format") || j["format"] != kSpecFormat)
        throw std::invalid_argument("spec json: missing or unknown format tag");
    for (const char* key : {"n", "perm", "matrices", "r", "s"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("spec json: missing field '") + key + "'");
    GeneratorSpec spec;
    if (!j["n"].is_number_integer()) throw std::invalid_argument("spec json: n must be an integer");
    spec.n = j["n"].get<int>();
    if (!j["perm"].is_array()) throw std::invalid_argument("spec json: perm must be an array");
    spec.perm = Permutation(j["perm"].get<std::vector<int>>());
    if (!j["matrices"].is_array())
        throw std::invalid_argument("spec json: matrices must be an array");
    for (const auto& m : j["matrices"]) {
        if (!m.is_object() || !m.contains("c") || !m.contains("s"))
            throw std::invalid_argument("spec json: each matrix needs 'c' and 's'");
        spec.matrices.push_back({complex_from_json(m["c"]), complex_from_json(m["s"])});
    }
    if (!j["r"].is_number_integer() || !j["s"].is_number_integer())
        throw std::invalid_argument("spec json: r and s must be integers");
    spec.r = j["r"].get<int>();
    spec.s = j["s"].get<int>();
    spec.validate();
    return spec;
}

inline nlohmann::json sequence_to_json_elements(const Sequence& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& z : a) arr.push_back(complex_to_json(z));
    return arr;
}

inline Sequence sequence_from_json_elements(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("sequence json: expected a nonempty array of [re, im]");
    Sequence out;
    out.reserve(arr.size());
    for (const auto& e : arr) out.push_back(complex_from_json(e));
    for (const auto& z : out)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("sequence json: elements must be finite");
    return out;
}

// ---------------------------------------------------------------------------
// Sequence files. CSV: one "re,im" line per element. JSON: either a bare
// array of [re, im] pairs or {"format": "golay-seq/1", "elements": [...]}.

inline std::string sequence_to_csv(const Sequence& a) {
    std::string out;
    for (const auto& z : a) {
        out += format_csv_line(z);
        out += '\n';
    }
    return out;
}

inline Sequence sequence_from_csv(const std::string& text) {
    Sequence out;
    std::istringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        double re, im;
        char extra;
        const int got = std::sscanf(trimmed.c_str(), "%lf,%lf%c", &re, &im, &extra);
        if (got != 2)
            throw std::invalid_argument("sequence csv: bad line " + std::to_string(lineno) +
                                        ": '" + line + "'");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::invalid_argument("sequence csv: non-finite value at line " +
                                        std::to_string(lineno));
        out.push_back({re, im});
    }
    if (out.empty()) throw std::invalid_argument("sequence csv: no elements");
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

// Sniff JSON vs CSV by the first non-space byte.
inline Sequence load_sequence(const std::string& path) {
    const std::string text = read_file(path);
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("sequence json: parse error in " + path + ": " + e.what());
        }
        if (j.is_array()) return sequence_from_json_elements(j);
        if (j.is_object() && j.contains("elements")) {
            if (j.contains("format") && j["format"] != kSeqFormat)
                throw std::invalid_argument("sequence json: unknown format tag");
            return sequence_from_json_elements(j["elements"]);
        }
        throw std::invalid_argument("sequence json: expected array or object with 'elements'");
    }
    return sequence_from_csv(text);
}

// Custom constellation file: bare array of [re, im] or object with "points"
// (and optional "name", "tol").
inline Constellation load_constellation(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("constellation json: parse error in " + path + ": " + e.what());
    }
    Constellation c;
    c.name = "custom:" + path;
    if (j.is_array()) {
        for (const auto& e : j) c.points.push_back(complex_from_json(e));
    } else if (j.is_object() && j.contains("points")) {
        for (const auto& e : j["points"]) c.points.push_back(complex_from_json(e));
        if (j.contains("name")) c.name = j["name"].get<std::string>();
        if (j.contains("tol")) c.tol = j["tol"].get<double>();
    } else {
        throw std::invalid_argument("constellation json: expected array or object with 'points'");
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------
// Reports.

inline nlohmann::json verdict_to_json(const PairVerdict& v) {
    nlohmann::json j;
    j["format"] = kReportFormat;
    j["kind"] = "verify";
    j["complementary"] = v.complementary;
    j["K"] = v.peak_sum;
    j["max_residual"] = v.max_offpeak;
    if (v.standard_bit) j["standard_bit"] = *v.standard_bit;
    else j["standard_bit"] = nullptr;
    return j;
}

inline nlohmann::json enumeration_to_json(const EnumerationGrid& grid,
                                          const EnumerationResult& res) {
    nlohmann::json j;
    j["format"] = kReportFormat;
    j["kind"] = "enumeration";
    j["n"] = grid.n;
    j["length"] = std::uint64_t{1} << grid.n;
    j["phase_order"] = grid.mpsk_order;
    j["all_perms"] = grid.all_perms;
    j["grid_points"] = res.grid_points;
    j["distinct_sequences"] = res.multiplicity.size();
    j["pair_emissions"] = res.pair_emissions;
    j["distinct_pairs_ordered"] = res.ordered_pairs.size();
    j["distinct_pairs_unordered"] = res.unordered_pairs.size();
    j["all_complementary"] = res.all_complementary;
    j["worst_offpeak"] = res.worst_offpeak;
    j["non_standard_pairs"] = res.non_standard_pairs;
    nlohmann::json mult = nlohmann::json::array();
    for (const auto& [key, count] : res.multiplicity) {
        const auto& seq = res.exemplar.at(key);
        mult.push_back({{"count", count}, {"elements", sequence_to_json_elements(seq)}});
    }
    j["sequences"] = std::move(mult);
    return j;
}

inline nlohmann::json census_to_json(const CensusReport& rep) {
    nlohmann::json j;
    j["format"] = kReportFormat;
    j["kind"] = "census";
    j["alphabet"] = rep.alphabet;
    j["length"] = rep.length;
    j["candidates"] = rep.candidates;
    j["pairs_ordered"] = rep.pairs_ordered;
    j["pairs_unordered"] = rep.pairs_unordered;
    j["standard_ordered"] = rep.standard_ordered;
    j["non_standard_ordered"] = rep.non_standard_ordered;
    nlohmann::json by_bit = nlohmann::json::object();
    for (const auto& [bit, count] : rep.standard_by_bit) by_bit[std::to_string(bit)] = count;
    j["standard_by_bit"] = std::move(by_bit);
    if (rep.coverage_checked) {
        nlohmann::json c;
        c["generator_pairs_ordered"] = rep.generator_pairs_ordered;
        c["generator_pairs_unordered"] = rep.generator_pairs_unordered;
        c["matched_ordered"] = rep.matched_ordered;
        c["census_only_ordered"] = rep.census_only_ordered;
        c["generator_only_ordered"] = rep.generator_only_ordered;
        c["matched_unordered"] = rep.matched_unordered;
        c["census_only_unordered"] = rep.census_only_unordered;
        c["generator_only_unordered"] = rep.generator_only_unordered;
        c["generator_non_standard"] = rep.generator_non_standard;
        c["generator_all_complementary"] = rep.generator_all_complementary;
        c["exact_ordered"] =
            rep.census_only_ordered == 0 && rep.generator_only_ordered == 0;
        c["exact_unordered"] =
            rep.census_only_unordered == 0 && rep.generator_only_unordered == 0;
        j["coverage"] = std::move(c);
    } else {
        j["coverage"] = nullptr;
    }
    return j;
}

inline nlohmann::json qam_search_to_json(const QamSearchOptions& opt,
                                         const QamSearchResult& res) {
    nlohmann::json j;
    j["format"] = kReportFormat;
    j["kind"] = "qam-search";
    j["target"] = opt.target.name;
    j["n"] = opt.n;
    j["candidates"] = opt.candidates.size();
    j["positions"] = res.positions;
    j["tried"] = res.tried;
    j["admissible_count"] = res.admissible.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : res.admissible) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [c, s] : a.blocks)
            blocks.push_back({{"c", complex_to_json(c)}, {"s", complex_to_json(s)}});
        arr.push_back({{"blocks", std::move(blocks)}});
    }
    j["admissible"] = std::move(arr);
    return j;
}

}  // namespace golay
