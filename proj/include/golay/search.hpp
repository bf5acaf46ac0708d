#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "constellation.hpp"
#include "core.hpp"
#include "generator.hpp"

namespace golay {

// Worker cap: explicit request, else GOLAY_FORGE_THREADS, else hardware.
inline int thread_budget(int requested = 0) {
    if (requested > 0) return std::min(requested, 256);
    if (const char* env = std::getenv("GOLAY_FORGE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace detail {

// Run fn(chunk, begin, end) over an even split of [0, total). Results must be
// collected per chunk and merged in chunk order so the outcome does not
// depend on the worker count.
template <class Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    if (total == 0) return;
    const int used = static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), total));
    if (used <= 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int t = 0; t < used; ++t) {
        const std::uint64_t begin = total * t / used;
        const std::uint64_t end = total * (t + 1) / used;
        pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
    }
    for (auto& th : pool) th.join();
}

inline std::int64_t quantize_coord(double x) {
    return std::llround(x * 1e6);  // 1e-6 grid
}

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detail

// Stable byte string identifying a sequence up to 1e-6 in each coordinate.
// Values produced by this toolkit sit within ~1e-12 of exact constellation
// products, far from quantization boundaries, so keys are reproducible.
inline std::string canonical_key(const Sequence& a) {
    std::string out;
    out.reserve(a.size() * 8);
    for (const auto& z : a) {
        out += std::to_string(detail::quantize_coord(z.real()));
        out += ':';
        out += std::to_string(detail::quantize_coord(z.imag()));
        out += ';';
    }
    return out;
}

inline std::string ordered_pair_key(const std::string& ka, const std::string& kb) {
    return ka + "|" + kb;
}

inline std::string unordered_pair_key(const std::string& ka, const std::string& kb) {
    return ka <= kb ? ka + "|" + kb : kb + "|" + ka;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep of the generator's parameter grid.

struct EnumerationGrid {
    int n = 1;
    bool all_perms = true;  // false: identity permutation only
    int mpsk_order = 2;     // phase grid for plain slots

    // Optional single explicit block swept over candidate points.
    bool has_qam_block = false;
    int qam_pos = 0;
    std::vector<cplx> c_candidates;
    std::vector<cplx> s_candidates;

    std::uint64_t max_points = 1'000'000;

    // Saturating grid size.
    std::uint64_t size() const {
        auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
            if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
            return a * b;
        };
        std::uint64_t perms = 1;
        if (all_perms)
            for (int k = 2; k <= n; ++k) perms = sat_mul(perms, static_cast<std::uint64_t>(k));
        const int phase_slots = has_qam_block ? n : n + 1;
        std::uint64_t sz = perms;
        for (int i = 0; i < phase_slots; ++i)
            sz = sat_mul(sz, static_cast<std::uint64_t>(mpsk_order));
        if (has_qam_block) {
            sz = sat_mul(sz, c_candidates.size());
            sz = sat_mul(sz, s_candidates.size());
        }
        return sz;
    }
};

struct EnumerationResult {
    std::uint64_t grid_points = 0;
    std::map<std::string, std::uint64_t> multiplicity;  // sequence key -> emissions
    std::map<std::string, Sequence> exemplar;           // sequence key -> first value seen
    std::set<std::string> ordered_pairs;                // row + column pairs, both directions
    std::set<std::string> unordered_pairs;
    std::uint64_t pair_emissions = 0;
    bool all_complementary = true;
    double worst_offpeak = 0.0;            // absolute, across all emitted pairs
    std::uint64_t non_standard_pairs = 0;  // emitted directions that fail the ratio test
};

inline EnumerationResult enumerate_generator(const EnumerationGrid& grid) {
    if (grid.n < 1 || grid.n > 20)
        throw std::invalid_argument("enumerate: n must be in 1..20");
    if (grid.mpsk_order < 2) throw std::invalid_argument("enumerate: phase order must be >= 2");
    if (grid.has_qam_block) {
        if (grid.qam_pos < 0 || grid.qam_pos > grid.n)
            throw std::invalid_argument("enumerate: block position out of range 0..n");
        if (grid.c_candidates.empty() || grid.s_candidates.empty())
            throw std::invalid_argument("enumerate: empty candidate set");
    }
    const std::uint64_t size = grid.size();
    if (size > grid.max_points) throw budget_error(size, grid.max_points);

    EnumerationResult res;
    const int phase_slots = grid.has_qam_block ? grid.n : grid.n + 1;

    auto classify_or_none = [](const Sequence& a, const Sequence& b) -> std::optional<int> {
        try {
            return classify_standard(a, b);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };

    std::vector<int> perm_images(grid.n);
    for (int i = 0; i < grid.n; ++i) perm_images[i] = i + 1;
    do {
        const Permutation perm{perm_images};
        const std::size_t n_c = grid.has_qam_block ? grid.c_candidates.size() : 1;
        const std::size_t n_s = grid.has_qam_block ? grid.s_candidates.size() : 1;
        for (std::size_t ci = 0; ci < n_c; ++ci) {
            for (std::size_t si = 0; si < n_s; ++si) {
                std::vector<int> phases(phase_slots, 0);
                for (;;) {
                    GeneratorSpec spec;
                    if (grid.has_qam_block) {
                        spec = detail::assemble_qamu_spec(
                            grid.n, {{grid.qam_pos, Unitary2x2{grid.c_candidates[ci],
                                                               grid.s_candidates[si]}}},
                            phases, grid.mpsk_order, perm, 0, 0);
                    } else {
                        MpskParams p;
                        p.order = grid.mpsk_order;
                        p.m = phases;
                        p.perm = perm;
                        spec = build_mpsk_spec(p);
                    }
                    ++res.grid_points;

                    const auto mat = generate_matrix(spec);
                    std::array<std::string, 4> keys;
                    for (int e = 0; e < 4; ++e) {
                        const auto& seq = mat.entry(e >> 1, e & 1);
                        keys[e] = canonical_key(seq);
                        auto [it, fresh] = res.multiplicity.try_emplace(keys[e], 0);
                        ++it->second;
                        if (fresh) res.exemplar.emplace(keys[e], seq);
                    }
                    // rows then columns, as (r,s) entry index pairs
                    static constexpr int kPairs[4][2] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}};
                    for (const auto& pr : kPairs) {
                        const auto& x = mat.entry(pr[0] >> 1, pr[0] & 1);
                        const auto& y = mat.entry(pr[1] >> 1, pr[1] & 1);
                        const auto verdict = is_complementary(x, y);
                        if (!verdict.complementary) res.all_complementary = false;
                        res.worst_offpeak = std::max(res.worst_offpeak, verdict.max_offpeak);
                        res.ordered_pairs.insert(ordered_pair_key(keys[pr[0]], keys[pr[1]]));
                        res.ordered_pairs.insert(ordered_pair_key(keys[pr[1]], keys[pr[0]]));
                        res.unordered_pairs.insert(unordered_pair_key(keys[pr[0]], keys[pr[1]]));
                        res.pair_emissions += 2;
                        if (!classify_or_none(x, y)) ++res.non_standard_pairs;
                        if (!classify_or_none(y, x)) ++res.non_standard_pairs;
                    }

                    // next phase vector
                    int d = 0;
                    while (d < phase_slots) {
                        if (++phases[d] < grid.mpsk_order) break;
                        phases[d++] = 0;
                    }
                    if (d == phase_slots) break;
                }
            }
        }
    } while (grid.all_perms ? std::next_permutation(perm_images.begin(), perm_images.end())
                            : false);
    return res;
}

// ---------------------------------------------------------------------------
// Census: every complementary pair over alphabet^L, by brute force.

struct CensusOptions {
    std::vector<cplx> alphabet;
    std::string alphabet_name;
    std::size_t length = 2;
    double tol = 1e-9;
    std::uint64_t budget = std::uint64_t{1} << 20;  // max |alphabet|^L
    std::uint64_t max_pairs = 10'000'000;
    // When > 0 and length = 2^n, the binary/M-PSK generator grid of that phase
    // order is swept and its pair set compared against the census.
    int coverage_order = 0;
    int threads = 0;  // 0: GOLAY_FORGE_THREADS or hardware
};

struct CensusReport {
    std::string alphabet;
    std::size_t length = 0;
    std::uint64_t candidates = 0;  // |alphabet|^L
    std::uint64_t pairs_ordered = 0;
    std::uint64_t pairs_unordered = 0;
    std::uint64_t standard_ordered = 0;
    std::uint64_t non_standard_ordered = 0;
    std::map<int, std::uint64_t> standard_by_bit;
    std::vector<std::pair<Sequence, std::uint64_t>> paired_sequences;  // value, partner count

    bool coverage_checked = false;
    std::uint64_t generator_pairs_ordered = 0;
    std::uint64_t generator_pairs_unordered = 0;
    std::uint64_t matched_ordered = 0;
    std::uint64_t census_only_ordered = 0;
    std::uint64_t generator_only_ordered = 0;
    std::uint64_t matched_unordered = 0;
    std::uint64_t census_only_unordered = 0;
    std::uint64_t generator_only_unordered = 0;
    std::uint64_t generator_non_standard = 0;
    bool generator_all_complementary = true;
};

inline CensusReport census_pairs(const CensusOptions& opt) {
    if (opt.alphabet.empty()) throw std::invalid_argument("census: empty alphabet");
    if (opt.length < 1 || opt.length > 16)
        throw std::invalid_argument("census: length must be in 1..16");
    if (!(opt.tol >= 0.0)) throw std::invalid_argument("census: tolerance must be nonnegative");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < opt.length; ++i) {
        if (total > opt.budget / opt.alphabet.size() + 1) throw budget_error(UINT64_MAX, opt.budget);
        total *= opt.alphabet.size();
    }
    if (total > opt.budget) throw budget_error(total, opt.budget);

    const std::size_t L = opt.length;
    const std::size_t A = opt.alphabet.size();
    auto sequence_at = [&](std::uint64_t idx) {
        Sequence s(L);
        for (std::size_t p = 0; p < L; ++p) {
            s[p] = opt.alphabet[idx % A];
            idx /= A;
        }
        return s;
    };

    // Off-peak autocorrelation fingerprints. A pair is complementary iff the
    // off-peak vectors negate each other, so candidates for a given sequence
    // live in the bucket of its negated fingerprint. Hash collisions only add
    // candidates; every candidate is re-verified with the defining sums.
    const int threads = thread_budget(opt.threads);
    std::vector<std::uint64_t> fwd(total), neg(total);
    detail::parallel_chunks(total, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const Sequence s = sequence_at(i);
            const auto prof = autocorrelation(s);
            std::uint64_t hf = 0xcbf29ce484222325ull, hn = hf;
            for (std::size_t lag = 1; lag < L; ++lag) {
                const cplx v = prof.at(static_cast<std::ptrdiff_t>(lag));
                const auto qre = detail::quantize_coord(v.real());
                const auto qim = detail::quantize_coord(v.imag());
                hf = detail::fnv1a(hf, static_cast<std::uint64_t>(qre));
                hf = detail::fnv1a(hf, static_cast<std::uint64_t>(qim));
                hn = detail::fnv1a(hn, static_cast<std::uint64_t>(-qre));
                hn = detail::fnv1a(hn, static_cast<std::uint64_t>(-qim));
            }
            fwd[i] = hf;
            neg[i] = hn;
        }
    });

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> bucket;
    bucket.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) bucket[fwd[i]].push_back(static_cast<std::uint32_t>(i));

    CensusReport rep;
    rep.alphabet = opt.alphabet_name;
    rep.length = L;
    rep.candidates = total;

    auto classify_or_none = [](const Sequence& a, const Sequence& b) -> std::optional<int> {
        if (!is_power_of_two(a.size())) return std::nullopt;
        for (const auto& z : a)
            if (z == cplx{}) return std::nullopt;
        return classify_standard(a, b);
    };

    struct PairHit {
        std::uint32_t a;
        std::uint32_t b;
        int bit;  // 0: non-standard
    };
    std::vector<std::vector<PairHit>> found(threads);
    std::atomic<bool> overflow{false};
    detail::parallel_chunks(total, threads, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        auto& out = found[chunk];
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto it = bucket.find(neg[i]);
            if (it == bucket.end()) continue;
            const Sequence a = sequence_at(i);
            for (const auto j : it->second) {
                const Sequence b = sequence_at(j);
                const auto verdict = is_complementary(a, b, opt.tol);
                if (!verdict.complementary) continue;
                const auto bit = classify_or_none(a, b);
                out.push_back({static_cast<std::uint32_t>(i), j, bit.value_or(0)});
                if (out.size() > opt.max_pairs) {
                    overflow = true;
                    return;
                }
            }
        }
    });
    if (overflow) throw budget_error(UINT64_MAX, opt.max_pairs);

    std::map<std::uint32_t, std::uint64_t> partners;
    for (const auto& chunk : found) {
        for (const auto& hit : chunk) {
            ++rep.pairs_ordered;
            if (hit.a <= hit.b) ++rep.pairs_unordered;
            if (hit.bit > 0) {
                ++rep.standard_ordered;
                ++rep.standard_by_bit[hit.bit];
            } else {
                ++rep.non_standard_ordered;
            }
            ++partners[hit.a];
        }
    }
    for (const auto& [idx, count] : partners) rep.paired_sequences.emplace_back(sequence_at(idx), count);

    if (opt.coverage_order > 0 && is_power_of_two(L) && L >= 2) {
        int n = 0;
        while ((std::size_t{1} << n) < L) ++n;
        EnumerationGrid grid;
        grid.n = n;
        grid.all_perms = true;
        grid.mpsk_order = opt.coverage_order;
        const auto gen = enumerate_generator(grid);

        std::set<std::string> census_ordered, census_unordered;
        for (const auto& chunk : found) {
            for (const auto& hit : chunk) {
                const auto ka = canonical_key(sequence_at(hit.a));
                const auto kb = canonical_key(sequence_at(hit.b));
                census_ordered.insert(ordered_pair_key(ka, kb));
                census_unordered.insert(unordered_pair_key(ka, kb));
            }
        }
        rep.coverage_checked = true;
        rep.generator_pairs_ordered = gen.ordered_pairs.size();
        rep.generator_pairs_unordered = gen.unordered_pairs.size();
        rep.generator_non_standard = gen.non_standard_pairs;
        rep.generator_all_complementary = gen.all_complementary;
        for (const auto& k : census_ordered) {
            if (gen.ordered_pairs.count(k)) ++rep.matched_ordered;
            else ++rep.census_only_ordered;
        }
        for (const auto& k : gen.ordered_pairs)
            if (!census_ordered.count(k)) ++rep.generator_only_ordered;
        for (const auto& k : census_unordered) {
            if (gen.unordered_pairs.count(k)) ++rep.matched_unordered;
            else ++rep.census_only_unordered;
        }
        for (const auto& k : gen.unordered_pairs)
            if (!census_unordered.count(k)) ++rep.generator_only_unordered;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Admissible-block search for QAM targets.

struct QamSearchOptions {
    Constellation target;
    int n = 2;
    std::vector<int> positions;   // 1 or 2 distinct slots in 0..n
    std::vector<cplx> candidates; // tried for both C and S at every position
    std::vector<int> fillers;     // fixed phases for remaining slots (empty: zeros)
    int filler_order = 4;
    Permutation perm;             // empty: identity
    double tol = 1e-9;
    std::uint64_t max_assignments = 10'000'000;
};

struct QamAssignment {
    std::vector<std::pair<cplx, cplx>> blocks;  // (C, S) per searched position
};

struct QamSearchResult {
    std::vector<int> positions;
    std::uint64_t tried = 0;
    std::vector<QamAssignment> admissible;  // all pass membership + complementarity
};

inline QamSearchResult search_qam_matrices(const QamSearchOptions& opt) {
    opt.target.validate();
    if (opt.n < 1 || opt.n > 20) throw std::invalid_argument("search: n must be in 1..20");
    if (opt.positions.empty() || opt.positions.size() > 2)
        throw std::invalid_argument("search: need one or two block positions");
    if (opt.positions.size() == 2 && opt.positions[0] == opt.positions[1])
        throw std::invalid_argument("search: block positions must be distinct");
    for (int p : opt.positions)
        if (p < 0 || p > opt.n)
            throw std::invalid_argument("search: block position out of range 0..n");
    if (opt.candidates.empty()) throw std::invalid_argument("search: empty candidate set");

    const std::size_t p = opt.positions.size();
    const std::size_t digits = 2 * p;
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        if (space > opt.max_assignments / opt.candidates.size() + 1)
            throw budget_error(UINT64_MAX, opt.max_assignments);
        space *= opt.candidates.size();
    }
    if (space > opt.max_assignments) throw budget_error(space, opt.max_assignments);

    const Permutation perm = opt.perm.size() == opt.n ? opt.perm : Permutation::identity(opt.n);
    std::vector<int> fillers = opt.fillers;
    const std::size_t want = static_cast<std::size_t>(opt.n) + 1 - p;
    if (fillers.empty()) fillers.assign(want, 0);
    if (fillers.size() != want)
        throw std::invalid_argument("search: need one filler phase per remaining slot");

    QamSearchResult res;
    res.positions = opt.positions;
    std::vector<std::size_t> idx(digits, 0);
    for (;;) {
        ++res.tried;
        std::vector<std::pair<int, Unitary2x2>> slots;
        for (std::size_t b = 0; b < p; ++b)
            slots.push_back({opt.positions[b],
                             Unitary2x2{opt.candidates[idx[2 * b]], opt.candidates[idx[2 * b + 1]]}});
        bool ok = true;
        try {
            const auto spec = detail::assemble_qamu_spec(opt.n, slots, fillers, opt.filler_order,
                                                         perm, 0, 0);
            const auto mat = generate_matrix(spec);
            for (int rr = 0; rr < 2 && ok; ++rr)
                for (int ss = 0; ss < 2 && ok; ++ss)
                    for (const auto& z : mat.entry(rr, ss))
                        if (!opt.target.contains(z)) {
                            ok = false;
                            break;
                        }
            if (ok) {
                ok = is_complementary(mat.entry(0, 0), mat.entry(0, 1), opt.tol).complementary &&
                     is_complementary(mat.entry(0, 0), mat.entry(1, 0), opt.tol).complementary;
            }
        } catch (const std::invalid_argument&) {
            ok = false;  // degenerate candidate (C = S = 0)
        }
        if (ok) {
            QamAssignment a;
            for (std::size_t b = 0; b < p; ++b)
                a.blocks.push_back({opt.candidates[idx[2 * b]], opt.candidates[idx[2 * b + 1]]});
            res.admissible.push_back(std::move(a));
        }
        std::size_t d = 0;
        while (d < digits) {
            if (++idx[d] < opt.candidates.size()) break;
            idx[d++] = 0;
        }
        if (d == digits) break;
    }
    return res;
}

}  // namespace golay
