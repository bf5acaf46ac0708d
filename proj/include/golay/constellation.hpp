#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "generator.hpp"

namespace golay {

// Finite point set with a membership tolerance. Membership means being within
// tol of some point (Euclidean distance in the plane).
struct Constellation {
    std::string name;
    std::vector<cplx> points;
    double tol = 1e-9;

    std::size_t size() const { return points.size(); }

    void validate() const {
        if (points.empty()) throw std::invalid_argument("constellation: empty point set");
        if (!(tol > 0.0) || !std::isfinite(tol))
            throw std::invalid_argument("constellation: tolerance must be positive");
        for (const auto& p : points)
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
                throw std::invalid_argument("constellation: points must be finite");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (std::abs(points[i] - points[j]) <= 2 * tol)
                    throw std::invalid_argument("constellation: points must be distinct");
    }

    bool contains(const cplx& z) const {
        for (const auto& p : points)
            if (std::abs(z - p) <= tol) return true;
        return false;
    }
};

namespace constellations {

inline Constellation binary(double scale = 1.0) {
    if (!(scale > 0.0)) throw std::invalid_argument("constellation: scale must be positive");
    return {"binary", {cplx{scale, 0.0}, cplx{-scale, 0.0}}, 1e-9};
}

inline Constellation mpsk(int order, double scale = 1.0) {
    if (order < 2) throw std::invalid_argument("mpsk: order must be >= 2");
    if (!(scale > 0.0)) throw std::invalid_argument("constellation: scale must be positive");
    std::vector<cplx> pts;
    pts.reserve(order);
    for (int k = 0; k < order; ++k) {
        const double ph = 2.0 * std::numbers::pi * k / order;
        pts.push_back(scale * cplx{std::cos(ph), std::sin(ph)});
    }
    return {"mpsk:" + std::to_string(order), std::move(pts), 1e-9};
}

// Square grids on odd coordinates: 16-QAM over {-3,-1,1,3}^2, 64-QAM over
// {-7,...,7}^2.
inline Constellation square_qam(int order, double scale = 1.0) {
    if (order != 16 && order != 64) throw std::invalid_argument("qam: order must be 16 or 64");
    if (!(scale > 0.0)) throw std::invalid_argument("constellation: scale must be positive");
    const int half = order == 16 ? 2 : 4;
    std::vector<cplx> pts;
    for (int u = -half; u < half; ++u)
        for (int v = -half; v < half; ++v)
            pts.push_back(scale * cplx{2.0 * u + 1.0, 2.0 * v + 1.0});
    return {"qam" + std::to_string(order), std::move(pts), 1e-9};
}

inline Constellation qam16(double scale = 1.0) { return square_qam(16, scale); }
inline Constellation qam64(double scale = 1.0) { return square_qam(64, scale); }

// 64-QAM on the diagonal (odd coordinate sum) grid: {u+vi : u+v odd,
// |u-v| <= 7, |u+v| <= 7}. Multiplying each point by 1+i lands on the square
// qam64 grid; products of two such points stay on this grid, which is why the
// two-block QAM construction is validated against it.
inline Constellation qam64_natural(double scale = 1.0) {
    if (!(scale > 0.0)) throw std::invalid_argument("constellation: scale must be positive");
    std::vector<cplx> pts;
    for (int u = -7; u <= 7; ++u)
        for (int v = -7; v <= 7; ++v) {
            if (((u + v) & 1) == 0) continue;
            if (std::abs(u - v) > 7 || std::abs(u + v) > 7) continue;
            pts.push_back(scale * cplx{double(u), double(v)});
        }
    return {"qam64:natural", std::move(pts), 1e-9};
}

// Everything a single off-axis block can emit: {C, C*, S, -S*} times the
// rotation_order-th roots of unity. Used as the declared output set for
// hexagonal and other custom single-block builds.
inline Constellation product_closure(cplx c, cplx s, int rotation_order,
                                     std::string name = "closure") {
    if (rotation_order < 1) throw std::invalid_argument("closure: rotation order must be >= 1");
    std::vector<cplx> pts;
    const cplx gens[4] = {c, std::conj(c), s, -std::conj(s)};
    for (const auto& g : gens)
        for (int k = 0; k < rotation_order; ++k) {
            const double ph = 2.0 * std::numbers::pi * k / rotation_order;
            const cplx z = g * cplx{std::cos(ph), std::sin(ph)};
            bool dup = false;
            for (const auto& p : pts)
                if (std::abs(z - p) <= 3e-9) dup = true;  // merge below membership tolerance
            if (!dup) pts.push_back(z);
        }
    return {std::move(name), std::move(pts), 1e-9};
}

inline Constellation custom(std::string name, std::vector<cplx> pts, double tol = 1e-9) {
    Constellation c{std::move(name), std::move(pts), tol};
    c.validate();
    return c;
}

}  // namespace constellations

// Throws constellation_error naming the first offending element. row/col tag
// which matrix entry the sequence came from (-1 when standalone).
inline void assert_membership(const Sequence& seq, const Constellation& c, int row = -1,
                              int col = -1) {
    for (std::size_t n = 0; n < seq.size(); ++n)
        if (!c.contains(seq[n])) throw constellation_error(c.name, row, col, n, seq[n]);
}

// ---------------------------------------------------------------------------
// Phase-parameterized builders.

// M-PSK family: phases m_0..m_N (units of 2*pi/M) are the coefficients of the
// generated sequence's normalized phase function. The k-th stage ratio
// -w_{k-1}/w_k equals e^{2*pi*i*m_k/M}, solved stage by stage from
// w_0 = e^{2*pi*i*m_0/M}.
struct MpskParams {
    int order = 2;          // M
    std::vector<int> m;     // n + 1 phase coefficients, each in 0..M-1
    Permutation perm;       // on {1..n}

    int n() const { return static_cast<int>(m.size()) - 1; }

    void validate() const {
        if (order < 2) throw std::invalid_argument("mpsk: order must be >= 2");
        if (m.empty()) throw std::invalid_argument("mpsk: need at least one phase (m_0)");
        if (static_cast<int>(m.size()) != perm.size() + 1)
            throw std::invalid_argument("mpsk: need exactly n+1 phases");
        for (int v : m)
            if (v < 0 || v >= order)
                throw std::invalid_argument("mpsk: phases must lie in 0..M-1");
    }
};

inline cplx unit_phase(int numer, int denom) {
    const double ph = 2.0 * std::numbers::pi * numer / denom;
    return {std::cos(ph), std::sin(ph)};
}

inline GeneratorSpec build_mpsk_spec(const MpskParams& p, int r = 0, int s = 0) {
    p.validate();
    GeneratorSpec spec;
    spec.n = p.n();
    spec.perm = p.perm;
    spec.r = r;
    spec.s = s;
    spec.matrices.resize(spec.n + 1);
    cplx w = unit_phase(p.m[0], p.order);
    spec.matrices[0] = {cplx{1.0, 0.0}, w};
    for (int k = 1; k <= spec.n; ++k) {
        w = -w * std::conj(unit_phase(p.m[k], p.order));
        spec.matrices[k] = {cplx{1.0, 0.0}, w};
    }
    spec.validate();
    return spec;
}

// Normalized phase (units of 2*pi/M, reduced mod M) of element n of the M-PSK
// sequence for boundary bits (r, s). The quadratic part needs M/2, so M must
// be even.
inline int mpsk_phase_anf(const MpskParams& p, int r, int s, std::uint64_t n) {
    p.validate();
    if (p.order % 2 != 0)
        throw std::domain_error("mpsk phase: closed form requires even M");
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("mpsk phase: r and s must be 0 or 1");
    const int nb = p.n();
    if (n >= (std::uint64_t{1} << nb))
        throw std::invalid_argument("mpsk phase: n out of range");
    const int half = p.order / 2;
    auto digit = [&](int k) {  // k-th permuted digit of n, k = 1..nb
        return static_cast<int>((n >> (p.perm(k) - 1)) & 1u);
    };
    long long e = p.m[0];
    if (nb >= 1) {
        e += static_cast<long long>(half) * r * digit(1);
        e += static_cast<long long>(half) * s * digit(nb);
        for (int k = 1; k < nb; ++k) e += static_cast<long long>(half) * digit(k) * digit(k + 1);
        for (int k = 1; k <= nb; ++k) e += static_cast<long long>(p.m[k]) * digit(k);
    }
    return static_cast<int>(((e % p.order) + p.order) % p.order);
}

// ---------------------------------------------------------------------------
// QAM builders: one or two stages carry arbitrary constellation points, the
// rest carry unit-C quarter-turn (or sixth-turn) phase blocks.

inline bool in_canonical_quadrant(const cplx& z) { return z.real() > 0.0 && z.imag() > 0.0; }

enum class QuadrantPolicy { allow, require };

namespace detail {

// Assemble a spec with explicit (C,S) blocks at the given slots and
// phase-only blocks elsewhere. fillers are consumed in ascending slot order.
inline GeneratorSpec assemble_qamu_spec(int n, const std::vector<std::pair<int, Unitary2x2>>& slots,
                                        const std::vector<int>& fillers, int filler_order,
                                        const Permutation& perm, int r, int s) {
    if (n < 0 || n > 30) throw std::invalid_argument("qam spec: n must be in 0..30");
    if (filler_order < 1) throw std::invalid_argument("qam spec: filler order must be >= 1");
    GeneratorSpec spec;
    spec.n = n;
    spec.perm = perm;
    spec.r = r;
    spec.s = s;
    spec.matrices.assign(n + 1, Unitary2x2{});
    std::vector<bool> taken(n + 1, false);
    for (const auto& [pos, u] : slots) {
        if (pos < 0 || pos > n)
            throw std::invalid_argument("qam spec: block position out of range 0..n");
        if (taken[pos]) throw std::invalid_argument("qam spec: block positions must be distinct");
        taken[pos] = true;
        spec.matrices[pos] = u;
    }
    if (static_cast<int>(fillers.size()) != n + 1 - static_cast<int>(slots.size()))
        throw std::invalid_argument("qam spec: need one filler phase per remaining slot");
    std::size_t fi = 0;
    for (int k = 0; k <= n; ++k) {
        if (taken[k]) continue;
        const int ph = fillers[fi++];
        if (ph < 0 || ph >= filler_order)
            throw std::invalid_argument("qam spec: filler phase out of range");
        spec.matrices[k] = {cplx{1.0, 0.0}, unit_phase(ph, filler_order)};
    }
    spec.validate();
    return spec;
}

}  // namespace detail

// Single QAM block at slot k_pos; every element of the full 2x2 matrix must
// land in the target constellation, and c/s themselves must be target points.
// With the default policy a c outside the open first quadrant is accepted
// (callers may warn); require turns it into an error since such specs
// duplicate quadrant ones up to rotation.
inline GeneratorSpec build_qam16_single(const Constellation& target, int n, int k_pos, cplx c,
                                        cplx s, const std::vector<int>& fillers,
                                        const Permutation& perm, int filler_order = 4, int r = 0,
                                        int s_bit = 0,
                                        QuadrantPolicy policy = QuadrantPolicy::allow) {
    target.validate();
    if (!target.contains(c) || !target.contains(s))
        throw std::invalid_argument("qam block: C and S must be constellation points");
    if (policy == QuadrantPolicy::require && !in_canonical_quadrant(c))
        throw std::invalid_argument("qam block: C outside the canonical quadrant duplicates a rotated spec");
    auto spec = detail::assemble_qamu_spec(n, {{k_pos, Unitary2x2{c, s}}}, fillers, filler_order,
                                           perm, r, s_bit);
    for (int rr = 0; rr < 2; ++rr)
        for (int ss = 0; ss < 2; ++ss)
            assert_membership(generate_index_form(spec, rr, ss), target, rr, ss);
    return spec;
}

// Two QAM blocks. No admission rule on c/s beyond the generated elements
// themselves: the full matrix is generated and every element checked against
// the target (by default the diagonal 64-point grid).
inline GeneratorSpec build_qam64_double(const Constellation& target, int n, int k1, int k2,
                                        cplx c1, cplx s1, cplx c2, cplx s2,
                                        const std::vector<int>& fillers, const Permutation& perm,
                                        int filler_order = 4, int r = 0, int s_bit = 0) {
    target.validate();
    if (k1 == k2) throw std::invalid_argument("qam block: positions must be distinct");
    auto spec = detail::assemble_qamu_spec(
        n, {{k1, Unitary2x2{c1, s1}}, {k2, Unitary2x2{c2, s2}}}, fillers, filler_order, perm, r,
        s_bit);
    for (int rr = 0; rr < 2; ++rr)
        for (int ss = 0; ss < 2; ++ss)
            assert_membership(generate_index_form(spec, rr, ss), target, rr, ss);
    return spec;
}

}  // namespace golay
