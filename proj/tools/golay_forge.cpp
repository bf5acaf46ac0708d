// golay-forge: generate complementary sequence pairs from 2x2-block products,
// verify complementarity, enumerate and census pair sets, search admissible
// QAM blocks, and benchmark generation.
//
// Exit codes: 0 success (or verified complementary), 1 verified negative,
// 2 usage/validation/budget error, 3 constellation violation.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "golay/golay.hpp"

namespace {

using golay::cplx;
using golay::GeneratorSpec;
using golay::Permutation;
using golay::Sequence;
using nlohmann::json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

cplx parse_complex(const std::string& raw, const char* what) {
    const std::string s = trim(raw);
    double re = 0, im = 0;
    char extra;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &extra) == 2) return {re, im};
    if (std::sscanf(s.c_str(), "%lf%c", &re, &extra) == 1) return {re, 0.0};
    throw std::invalid_argument(std::string(what) + ": expected 're,im', got '" + raw + "'");
}

// Semicolon-separated list of complex points: "2,1;1,2;-2,1".
std::vector<cplx> parse_point_list(const std::string& raw, const char* what) {
    std::vector<cplx> out;
    std::size_t pos = 0;
    while (pos <= raw.size()) {
        const auto next = raw.find(';', pos);
        const auto token = raw.substr(pos, next == std::string::npos ? next : next - pos);
        if (!trim(token).empty()) out.push_back(parse_complex(token, what));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty point list");
    return out;
}

// Named point sets accepted wherever a constellation is expected:
// binary, mpsk:M, qpsk, qam16, qam64, qam64:natural, custom:FILE.
golay::Constellation constellation_from_name(const std::string& name) {
    namespace cs = golay::constellations;
    if (name == "binary") return cs::binary();
    if (name == "qpsk") return cs::mpsk(4);
    if (name.rfind("mpsk:", 0) == 0) return cs::mpsk(std::stoi(name.substr(5)));
    if (name == "qam16") return cs::qam16();
    if (name == "qam64") return cs::qam64();
    if (name == "qam64:natural") return cs::qam64_natural();
    if (name.rfind("custom:", 0) == 0) return golay::load_constellation(name.substr(7));
    throw std::invalid_argument(
        "unknown constellation '" + name +
        "' (expected binary, mpsk:M, qpsk, qam16, qam64, qam64:natural, custom:FILE)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    golay::write_file(out_path, text);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_block(const Sequence& seq, const std::string& fmt) {
    if (fmt == "csv") return golay::sequence_to_csv(seq);
    std::string out;
    for (const auto& z : seq) {
        out += golay::format_complex_text(z);
        out += '\n';
    }
    return out;
}

std::string file_ext(const std::string& fmt) {
    if (fmt == "csv") return "csv";
    if (fmt == "json") return "json";
    return "txt";
}

std::string flatten_sequences_csv(const std::vector<Sequence>& seqs) {
    std::string out;
    for (const auto& seq : seqs) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) out += ',';
            out += golay::format_csv_line(seq[i]);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// generate

struct GenOpts {
    std::string spec_file;
    bool random = false;
    std::uint64_t seed = 0;
    int n = 0;
    bool n_set = false;
    std::string family;
    std::vector<int> m;
    std::string perm_str;
    bool perm_set = false;
    int r = 0, s = 0;
    bool r_set = false, s_set = false;
    std::vector<int> qam_pos;
    std::string qam_c, qam_s, qam_c2, qam_s2;
    std::vector<int> fillers;
    int filler_order = 4;
    std::string lattice = "auto";
    std::string quadrant = "allow";
    double tol = 1e-9;
    bool tol_set = false;
    bool pair = false;
    bool matrix = false;
    std::string format = "csv";
    std::string out;
    std::string emit_spec;
};

GeneratorSpec sample_spec(golay::SpecSampler& sampler, const std::string& family, int n) {
    if (family == "binary") return sampler.mpsk_spec(n, 2);
    if (family == "qpsk") return sampler.mpsk_spec(n, 4);
    if (family.rfind("mpsk:", 0) == 0) return sampler.mpsk_spec(n, std::stoi(family.substr(5)));
    if (family == "qam16") return sampler.qam16_spec(n);
    if (family == "qam64") return sampler.qam64_spec(n);
    if (family == "dense") return sampler.dense_spec(n);
    throw std::invalid_argument("--random samples binary, mpsk:M, qpsk, qam16, qam64 or dense");
}

GeneratorSpec spec_from_flags(const GenOpts& o) {
    if (!o.n_set) throw std::invalid_argument("generate: --n is required (or pass --spec/--random)");
    if (o.family.empty())
        throw std::invalid_argument("generate: --constellation is required with flag-built specs");
    const int n = o.n;
    Permutation perm;
    if (o.perm_set) {
        perm = Permutation::parse(o.perm_str, n);
    } else if (n <= 1) {
        perm = Permutation::identity(n);
    } else {
        throw std::invalid_argument(
            "generate: --perm is required when --n > 1 (say --perm identity explicitly)");
    }

    const bool single_block = o.family == "qam16" || o.family == "closure" ||
                              o.family.rfind("custom:", 0) == 0;
    if (o.family == "binary" || o.family == "qpsk" || o.family.rfind("mpsk:", 0) == 0) {
        golay::MpskParams p;
        p.order = o.family == "binary" ? 2
                  : o.family == "qpsk" ? 4
                                       : std::stoi(o.family.substr(5));
        if (o.m.empty())
            throw std::invalid_argument("generate: --m with n+1 phase coefficients is required");
        p.m = o.m;
        p.perm = perm;
        return golay::build_mpsk_spec(p, o.r, o.s);
    }
    if (single_block) {
        if (o.qam_pos.size() != 1)
            throw std::invalid_argument("generate: one --qam-pos slot is required here");
        if (o.qam_c.empty() || o.qam_s.empty())
            throw std::invalid_argument("generate: --qam-c and --qam-s are required here");
        const cplx c = parse_complex(o.qam_c, "--qam-c");
        const cplx s = parse_complex(o.qam_s, "--qam-s");
        std::vector<int> fillers = o.fillers;
        if (fillers.empty()) fillers.assign(n, 0);
        golay::Constellation target;
        if (o.family == "qam16") target = golay::constellations::qam16();
        else if (o.family == "closure")
            target = golay::constellations::product_closure(c, s, o.filler_order);
        else
            target = golay::load_constellation(o.family.substr(7));
        if (o.tol_set) target.tol = o.tol;
        const auto policy = o.quadrant == "require" ? golay::QuadrantPolicy::require
                                                    : golay::QuadrantPolicy::allow;
        return golay::build_qam16_single(target, n, o.qam_pos[0], c, s, fillers, perm,
                                         o.filler_order, o.r, o.s, policy);
    }
    if (o.family == "qam64") {
        if (o.qam_pos.size() != 2)
            throw std::invalid_argument("generate: two --qam-pos slots are required for qam64");
        if (o.qam_c.empty() || o.qam_s.empty() || o.qam_c2.empty() || o.qam_s2.empty())
            throw std::invalid_argument(
                "generate: --qam-c, --qam-s, --qam-c2 and --qam-s2 are required for qam64");
        std::vector<int> fillers = o.fillers;
        if (fillers.empty() && n >= 1) fillers.assign(n - 1, 0);
        golay::Constellation target = o.lattice == "standard"
                                          ? golay::constellations::qam64()
                                          : golay::constellations::qam64_natural();
        if (o.tol_set) target.tol = o.tol;
        return golay::build_qam64_double(target, n, o.qam_pos[0], o.qam_pos[1],
                                         parse_complex(o.qam_c, "--qam-c"),
                                         parse_complex(o.qam_s, "--qam-s"),
                                         parse_complex(o.qam_c2, "--qam-c2"),
                                         parse_complex(o.qam_s2, "--qam-s2"), fillers, perm,
                                         o.filler_order, o.r, o.s);
    }
    throw std::invalid_argument(
        "generate: --constellation must be binary, mpsk:M, qpsk, qam16, qam64, closure or "
        "custom:FILE");
}

int run_generate(const GenOpts& o) {
    if (o.lattice != "auto" && o.lattice != "standard" && o.lattice != "natural")
        throw std::invalid_argument("generate: --lattice must be auto, standard or natural");
    if (o.quadrant != "allow" && o.quadrant != "require")
        throw std::invalid_argument("generate: --quadrant must be allow or require");

    GeneratorSpec spec;
    json meta = json::object();
    std::string comment;
    if (!o.spec_file.empty()) {
        spec = golay::spec_from_json(json::parse(golay::read_file(o.spec_file)));
        if (o.r_set) spec.r = o.r;
        if (o.s_set) spec.s = o.s;
    } else if (o.random) {
        if (!o.n_set) throw std::invalid_argument("generate: --random requires --n");
        golay::SpecSampler sampler(o.seed);
        spec = sample_spec(sampler, o.family.empty() ? "mpsk:4" : o.family, o.n);
        if (o.r_set) spec.r = o.r;
        if (o.s_set) spec.s = o.s;
        meta["prng"] = golay::kPrngName;
        meta["seed"] = o.seed;
        meta["spec"] = golay::spec_to_json(spec);
        comment = std::string("# prng: ") + golay::kPrngName + "\n# seed: " +
                  std::to_string(o.seed) + "\n";
    } else {
        spec = spec_from_flags(o);
    }

    if (!o.emit_spec.empty())
        golay::write_file(o.emit_spec, render_json(golay::spec_to_json(spec)));

    if (!o.pair && !o.matrix) {
        const auto seq = golay::generate_index_form(spec);
        if (o.format == "json") {
            json j;
            j["format"] = golay::kSeqFormat;
            j["elements"] = golay::sequence_to_json_elements(seq);
            j.update(meta);
            emit(render_json(j), o.out);
        } else {
            emit(comment + render_block(seq, o.format), o.out);
        }
        return 0;
    }

    std::vector<std::pair<std::string, Sequence>> parts;
    if (o.pair) {
        parts.emplace_back("a", golay::generate_index_form(spec, spec.r, 0));
        parts.emplace_back("b", golay::generate_index_form(spec, spec.r, 1));
    } else {
        const auto mat = golay::generate_matrix(spec);
        parts.emplace_back("m00", mat.entry(0, 0));
        parts.emplace_back("m01", mat.entry(0, 1));
        parts.emplace_back("m10", mat.entry(1, 0));
        parts.emplace_back("m11", mat.entry(1, 1));
    }

    if (o.format == "json" && o.out.empty()) {
        json j;
        j["format"] = golay::kSeqFormat;
        for (const auto& [tag, seq] : parts) j[tag] = golay::sequence_to_json_elements(seq);
        j.update(meta);
        emit(render_json(j), "");
        return 0;
    }
    if (o.out.empty()) {
        std::string text = comment;
        for (const auto& [tag, seq] : parts) {
            text += "# " + tag + "\n";
            text += render_block(seq, o.format);
        }
        emit(text, "");
        return 0;
    }
    // --out acts as a prefix: PREFIX.a.csv, PREFIX.b.csv, PREFIX.m00.csv, ...
    for (const auto& [tag, seq] : parts) {
        const std::string path = o.out + "." + tag + "." + file_ext(o.format);
        if (o.format == "json") {
            json j;
            j["format"] = golay::kSeqFormat;
            j["elements"] = golay::sequence_to_json_elements(seq);
            golay::write_file(path, render_json(j));
        } else {
            golay::write_file(path, comment + render_block(seq, o.format));
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& file_a, const std::string& file_b, double tol,
               const std::string& out) {
    const auto a = golay::load_sequence(file_a);
    const auto b = golay::load_sequence(file_b);
    if (a.size() != b.size())
        throw std::invalid_argument("verify: sequence lengths differ (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    auto v = golay::is_complementary(a, b, tol);
    try {
        v.standard_bit = golay::classify_standard(a, b);
    } catch (const std::exception&) {
        v.standard_bit.reset();
    }
    json j = golay::verdict_to_json(v);
    j["length"] = a.size();
    j["tolerance"] = tol;
    emit(render_json(j), out);
    return v.complementary ? 0 : 1;
}

// ---------------------------------------------------------------------------
// enumerate / census / search / bench

struct EnumOpts {
    int n = 1;
    int order = 2;
    bool identity_only = false;
    std::vector<int> block_pos;
    std::string c_set, s_set;
    std::uint64_t max_points = 1'000'000;
    std::string out;
    std::string keys_csv;
};

int run_enumerate(const EnumOpts& o) {
    golay::EnumerationGrid grid;
    grid.n = o.n;
    grid.all_perms = !o.identity_only;
    grid.mpsk_order = o.order;
    grid.max_points = o.max_points;
    if (!o.block_pos.empty()) {
        if (o.block_pos.size() != 1)
            throw std::invalid_argument("enumerate: exactly one --block-pos slot is supported");
        if (o.c_set.empty() || o.s_set.empty())
            throw std::invalid_argument("enumerate: --block-pos needs --c-set and --s-set");
        grid.has_qam_block = true;
        grid.qam_pos = o.block_pos[0];
        grid.c_candidates = parse_point_list(o.c_set, "--c-set");
        grid.s_candidates = parse_point_list(o.s_set, "--s-set");
    }
    const auto res = golay::enumerate_generator(grid);
    emit(render_json(golay::enumeration_to_json(grid, res)), o.out);
    if (!o.keys_csv.empty()) {
        std::vector<Sequence> seqs;
        seqs.reserve(res.exemplar.size());
        for (const auto& [key, seq] : res.exemplar) seqs.push_back(seq);
        golay::write_file(o.keys_csv, flatten_sequences_csv(seqs));
    }
    return 0;
}

struct CensusOpts {
    std::string alphabet = "binary";
    int length = 2;
    double tol = 1e-9;
    std::uint64_t budget = std::uint64_t{1} << 20;
    int coverage_order = 0;
    int threads = 0;
    std::string out;
    std::string keys_csv;
};

int run_census(const CensusOpts& o) {
    const auto c = constellation_from_name(o.alphabet);
    golay::CensusOptions opt;
    opt.alphabet = c.points;
    opt.alphabet_name = c.name;
    opt.length = static_cast<std::size_t>(o.length);
    opt.tol = o.tol;
    opt.budget = o.budget;
    opt.coverage_order = o.coverage_order;
    opt.threads = o.threads;
    const auto rep = golay::census_pairs(opt);
    emit(render_json(golay::census_to_json(rep)), o.out);
    if (!o.keys_csv.empty()) {
        std::vector<Sequence> seqs;
        seqs.reserve(rep.paired_sequences.size());
        for (const auto& [seq, partners] : rep.paired_sequences) seqs.push_back(seq);
        golay::write_file(o.keys_csv, flatten_sequences_csv(seqs));
    }
    return 0;
}

struct SearchOpts {
    std::string target = "qam64:natural";
    int n = 2;
    std::vector<int> positions;
    std::string candidates;
    std::string candidate_set;
    double max_norm = 0.0;
    bool max_norm_set = false;
    std::vector<int> fillers;
    int filler_order = 4;
    std::string perm_str;
    double tol = 1e-9;
    std::uint64_t max_assignments = 10'000'000;
    std::string out;
};

int run_search(const SearchOpts& o) {
    golay::QamSearchOptions opt;
    opt.target = constellation_from_name(o.target);
    opt.n = o.n;
    opt.positions = o.positions;
    if (!o.candidates.empty() && !o.candidate_set.empty())
        throw std::invalid_argument("search: pass --candidates or --candidate-set, not both");
    if (!o.candidates.empty())
        opt.candidates = parse_point_list(o.candidates, "--candidates");
    else if (!o.candidate_set.empty())
        opt.candidates = constellation_from_name(o.candidate_set).points;
    else
        opt.candidates = opt.target.points;
    if (o.max_norm_set) {
        std::vector<cplx> kept;
        for (const auto& z : opt.candidates)
            if (std::abs(z) <= o.max_norm + 1e-9) kept.push_back(z);
        opt.candidates = std::move(kept);
        if (opt.candidates.empty())
            throw std::invalid_argument("search: --max-norm filtered out every candidate");
    }
    opt.fillers = o.fillers;
    opt.filler_order = o.filler_order;
    if (!o.perm_str.empty()) opt.perm = Permutation::parse(o.perm_str, o.n);
    opt.tol = o.tol;
    opt.max_assignments = o.max_assignments;
    const auto res = golay::search_qam_matrices(opt);
    emit(render_json(golay::qam_search_to_json(opt, res)), o.out);
    return 0;
}

struct BenchOpts {
    int n = 10;
    int reps = 150;
    std::uint64_t seed = 0;
    int order = 4;
    std::string out;
};

int run_bench(const BenchOpts& o) {
    if (o.n < 6 || o.n > 20) throw std::invalid_argument("bench: --n must be in 6..20");
    if (o.reps < 100) throw std::invalid_argument("bench: at least 100 repetitions required");

    golay::SpecSampler sampler(o.seed);
    std::vector<GeneratorSpec> specs;
    specs.reserve(o.reps);
    for (int i = 0; i < o.reps; ++i) specs.push_back(sampler.mpsk_spec(o.n, o.order));

    for (int i = 0; i < 3; ++i) {
        volatile double sink = golay::generate_index_form(specs[0]).back().real();
        (void)sink;
    }

    std::vector<double> us(o.reps);
    std::uint64_t checksum = 0xcbf29ce484222325ull;
    for (int i = 0; i < o.reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto seq = golay::generate_index_form(specs[i]);
        const auto t1 = std::chrono::steady_clock::now();
        us[i] = std::chrono::duration<double, std::micro>(t1 - t0).count();
        for (const auto& z : seq) {
            checksum = golay::detail::fnv1a(checksum, std::bit_cast<std::uint64_t>(z.real()));
            checksum = golay::detail::fnv1a(checksum, std::bit_cast<std::uint64_t>(z.imag()));
        }
    }
    std::sort(us.begin(), us.end());
    const double median = us[us.size() / 2];
    const double p95 = us[static_cast<std::size_t>(0.95 * (us.size() - 1))];
    const double length = static_cast<double>(std::uint64_t{1} << o.n);

    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum));

    json j;
    j["format"] = golay::kReportFormat;
    j["kind"] = "bench";
    j["n"] = o.n;
    j["length"] = std::uint64_t{1} << o.n;
    j["reps"] = o.reps;
    j["prng"] = golay::kPrngName;
    j["seed"] = o.seed;
    j["order"] = o.order;
    j["median_us"] = median;
    j["p95_us"] = p95;
    j["median_per_symbol_us"] = median / length;
    j["p95_per_symbol_us"] = p95 / length;
    j["checksum"] = hex;
    j["hard_target_ms"] = 3.0;
    j["meets_hard_target"] = median < 3000.0;
    j["soft_target_us"] = 100.0;
    j["meets_soft_target"] = median < 100.0;
    emit(render_json(j), o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golay-forge: complementary sequence pair toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    GenOpts g;
    auto* gen = app.add_subcommand("generate",
                                   "Generate a sequence, pair or full 2x2 matrix from a spec");
    gen->add_option("--spec", g.spec_file, "Read a golay-spec/1 JSON file");
    gen->add_flag("--random", g.random, "Sample a random spec (needs --n; family from --constellation)");
    gen->add_option("--seed", g.seed, "PRNG seed for --random")->capture_default_str();
    auto* n_opt = gen->add_option("--n", g.n, "Number of stages (length 2^n)")
                      ->check(CLI::Range(0, 30));
    gen->add_option("--constellation", g.family,
                    "binary | mpsk:M | qpsk | qam16 | qam64 | closure | custom:FILE");
    gen->add_option("--m", g.m, "Phase coefficients m_0..m_n (units of 2*pi/M)")->delimiter(',');
    auto* perm_opt = gen->add_option("--perm", g.perm_str,
                                     "Bit permutation as images '2,1,3' or 'identity'");
    auto* r_opt = gen->add_option("--r", g.r, "First boundary bit")->check(CLI::Range(0, 1));
    auto* s_opt = gen->add_option("--s", g.s, "Last boundary bit")->check(CLI::Range(0, 1));
    gen->add_option("--qam-pos", g.qam_pos, "Slot(s) carrying explicit (C,S) blocks")
        ->delimiter(',');
    gen->add_option("--qam-c,--c", g.qam_c, "Block C value as 're,im'");
    gen->add_option("--qam-s", g.qam_s, "Block S value as 're,im'");
    gen->add_option("--qam-c2", g.qam_c2, "Second block C value (qam64)");
    gen->add_option("--qam-s2", g.qam_s2, "Second block S value (qam64)");
    gen->add_option("--fillers", g.fillers, "Phases for the remaining slots (default all 0)")
        ->delimiter(',');
    gen->add_option("--filler-order", g.filler_order, "Root-of-unity order for filler phases")
        ->capture_default_str();
    gen->add_option("--lattice", g.lattice, "qam64 target grid: auto | standard | natural")
        ->capture_default_str();
    gen->add_option("--quadrant", g.quadrant, "Policy for C outside the first quadrant: allow | require")
        ->capture_default_str();
    auto* tol_opt = gen->add_option("--tol", g.tol, "Constellation membership tolerance");
    auto* pair_flag = gen->add_flag("--pair", g.pair, "Emit the complementary pair (a, b)");
    auto* matrix_flag = gen->add_flag("--matrix", g.matrix, "Emit all four matrix entries");
    pair_flag->excludes(matrix_flag);
    gen->add_option("--format", g.format, "csv | json | text")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    gen->add_option("--out", g.out, "Output file (prefix with --pair/--matrix); default stdout");
    gen->add_option("--emit-spec", g.emit_spec, "Also write the spec as golay-spec/1 JSON");
    gen->callback([&] {
        g.n_set = n_opt->count() > 0;
        g.perm_set = perm_opt->count() > 0;
        g.r_set = r_opt->count() > 0;
        g.s_set = s_opt->count() > 0;
        g.tol_set = tol_opt->count() > 0;
        rc = run_generate(g);
    });

    std::string v_a, v_b, v_out;
    double v_tol = 1e-9;
    auto* ver = app.add_subcommand("verify", "Check two sequence files for complementarity");
    ver->add_option("file_a", v_a, "First sequence (CSV or JSON)")->required();
    ver->add_option("file_b", v_b, "Second sequence (CSV or JSON)")->required();
    ver->add_option("--tol", v_tol, "Relative off-peak tolerance")->capture_default_str();
    ver->add_option("--out", v_out, "Write the verdict JSON here instead of stdout");
    ver->callback([&] { rc = run_verify(v_a, v_b, v_tol, v_out); });

    EnumOpts e;
    auto* enu = app.add_subcommand("enumerate",
                                   "Sweep the generator grid and deduplicate its outputs");
    enu->add_option("--n", e.n, "Number of stages")->check(CLI::Range(1, 20))->required();
    enu->add_option("--order", e.order, "Phase order M for plain slots")->capture_default_str();
    enu->add_flag("--identity-only", e.identity_only, "Fix the identity permutation");
    enu->add_option("--block-pos", e.block_pos, "Slot swept over explicit (C,S) candidates")
        ->delimiter(',');
    enu->add_option("--c-set", e.c_set, "C candidates 're,im;re,im;...' for --block-pos");
    enu->add_option("--s-set", e.s_set, "S candidates 're,im;re,im;...' for --block-pos");
    enu->add_option("--max-points", e.max_points, "Grid size budget")->capture_default_str();
    enu->add_option("--out", e.out, "Report file; default stdout");
    enu->add_option("--keys-csv", e.keys_csv, "Also write one deduplicated sequence per line");
    enu->callback([&] { rc = run_enumerate(e); });

    CensusOpts c;
    auto* cen = app.add_subcommand("census",
                                   "Brute-force every complementary pair over alphabet^L");
    cen->add_option("--alphabet", c.alphabet, "binary | mpsk:M | qam16 | qam64 | custom:FILE")
        ->capture_default_str();
    cen->add_option("--length", c.length, "Sequence length L")->check(CLI::Range(1, 16))
        ->required();
    cen->add_option("--tol", c.tol, "Complementarity tolerance")->capture_default_str();
    cen->add_option("--budget", c.budget, "Max |alphabet|^L")->capture_default_str();
    cen->add_option("--coverage-order", c.coverage_order,
                    "Compare against the generator grid of this phase order (0 = off)")
        ->capture_default_str();
    cen->add_option("--threads", c.threads, "Worker cap (0: GOLAY_FORGE_THREADS or hardware)")
        ->capture_default_str();
    cen->add_option("--out", c.out, "Report file; default stdout");
    cen->add_option("--keys-csv", c.keys_csv, "Also write each paired sequence as a CSV line");
    cen->callback([&] { rc = run_census(c); });

    SearchOpts s;
    auto* sea = app.add_subcommand("search", "Find (C,S) blocks whose matrices stay in a constellation");
    sea->add_option("--target", s.target, "Membership target constellation")
        ->capture_default_str();
    sea->add_option("--n", s.n, "Number of stages")->check(CLI::Range(1, 20))->required();
    sea->add_option("--positions", s.positions, "One or two slots to search")
        ->delimiter(',')
        ->required();
    sea->add_option("--candidates", s.candidates, "Explicit candidate points 're,im;re,im;...'");
    sea->add_option("--candidate-set", s.candidate_set,
                    "Named candidate constellation (default: the target's points)");
    auto* norm_opt = sea->add_option("--max-norm", s.max_norm, "Drop candidates with |z| above this");
    sea->add_option("--fillers", s.fillers, "Phases for unsearched slots (default all 0)")
        ->delimiter(',');
    sea->add_option("--filler-order", s.filler_order, "Root-of-unity order for filler phases")
        ->capture_default_str();
    sea->add_option("--perm", s.perm_str, "Bit permutation (default identity)");
    sea->add_option("--tol", s.tol, "Complementarity tolerance")->capture_default_str();
    sea->add_option("--max-assignments", s.max_assignments, "Assignment budget")
        ->capture_default_str();
    sea->add_option("--out", s.out, "Report file; default stdout");
    sea->callback([&] {
        s.max_norm_set = norm_opt->count() > 0;
        rc = run_search(s);
    });

    BenchOpts b;
    auto* ben = app.add_subcommand("bench", "Time sequence generation over random specs");
    ben->add_option("--n", b.n, "Number of stages (6..20)")->capture_default_str();
    ben->add_option("--reps", b.reps, "Repetitions (>= 100)")->capture_default_str();
    ben->add_option("--seed", b.seed, "PRNG seed")->capture_default_str();
    ben->add_option("--order", b.order, "Phase order of the sampled specs")->capture_default_str();
    ben->add_option("--out", b.out, "Report file; default stdout");
    ben->callback([&] { rc = run_bench(b); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    } catch (const golay::constellation_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 3;
    } catch (const golay::budget_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return rc;
}
