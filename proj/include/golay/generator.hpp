#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "core.hpp"

namespace golay {

// Wide-sense unitary 2x2 block [[C, S], [-S*, C*]]. Only C and S are stored;
// the other two entries are derived. C and S may be any complex values not
// both zero (no unit-norm requirement).
struct Unitary2x2 {
    cplx c{1.0, 0.0};
    cplx s{1.0, 0.0};

    cplx entry(int x, int y) const {
        if (x < 0 || x > 1 || y < 0 || y > 1)
            throw std::invalid_argument("unitary entry: indices must be 0 or 1");
        if (x == 0) return y == 0 ? c : s;
        return y == 0 ? -std::conj(s) : std::conj(c);
    }

    // Row energy |C|^2 + |S|^2; the pair's combined autocorrelation peak is the
    // product of these over all stages.
    double k_factor() const { return std::norm(c) + std::norm(s); }
};

// Full description of one generated sequence: N stages of 2x2 blocks plus the
// boundary bits r (first factor row) and s (last factor column).
struct GeneratorSpec {
    int n = 0;
    Permutation perm;                  // on {1..n}
    std::vector<Unitary2x2> matrices;  // n + 1 entries
    int r = 0;
    int s = 0;

    std::uint64_t length() const { return std::uint64_t{1} << n; }

    void validate() const {
        if (n < 0 || n > 30)
            throw std::invalid_argument("spec: n must be in 0..30");
        if (perm.size() != n)
            throw std::invalid_argument("spec: permutation size must equal n");
        if (matrices.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("spec: need exactly n+1 matrices");
        for (const auto& u : matrices) {
            if (!std::isfinite(u.c.real()) || !std::isfinite(u.c.imag()) ||
                !std::isfinite(u.s.real()) || !std::isfinite(u.s.imag()))
                throw std::invalid_argument("spec: matrix entries must be finite");
            if (u.k_factor() == 0.0)
                throw std::invalid_argument("spec: C and S must not both be zero");
        }
        if (r < 0 || r > 1 || s < 0 || s > 1)
            throw std::invalid_argument("spec: r and s must be 0 or 1");
    }
};

namespace detail {

// Per-stage entry table indexed by 2x + y, plus the bit masks selecting the
// permuted digit feeding each stage boundary. Shared by the evaluation forms.
struct StageTables {
    std::vector<std::array<cplx, 4>> ent;  // [k][2x+y]
    std::vector<std::uint64_t> mask;       // mask[k] for boundary k = 1..n

    explicit StageTables(const GeneratorSpec& spec) {
        const int n = spec.n;
        ent.resize(n + 1);
        for (int k = 0; k <= n; ++k) {
            const auto& u = spec.matrices[k];
            ent[k] = {u.c, u.s, -std::conj(u.s), std::conj(u.c)};
        }
        mask.assign(n + 2, 0);
        for (int k = 1; k <= n; ++k) mask[k] = std::uint64_t{1} << (spec.perm(k) - 1);
    }
};

}  // namespace detail

// Direct product form: element(n) = prod_k U^k[x_k][x_{k+1}] over the extended
// bit chain r, n_{P(1)}, ..., n_{P(N)}, s. Factors are multiplied in ascending
// stage order; tests rely on that order for exact recursion identities.
inline Sequence generate_index_form(const GeneratorSpec& spec, int r, int s) {
    spec.validate();
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("generate: r and s must be 0 or 1");
    const detail::StageTables t(spec);
    const int n = spec.n;
    Sequence out(spec.length());
    for (std::uint64_t v = 0; v < out.size(); ++v) {
        int prev = r;
        cplx acc{1.0, 0.0};
        for (int k = 0; k <= n; ++k) {
            const int next = (k == n) ? s : ((v & t.mask[k + 1]) ? 1 : 0);
            acc *= t.ent[k][2 * prev + next];
            prev = next;
        }
        out[v] = acc;
    }
    return out;
}

inline Sequence generate_index_form(const GeneratorSpec& spec) {
    return generate_index_form(spec, spec.r, spec.s);
}

// Boolean exponent form: element(n) = prod_k C^e1 C*^e2 S^e3 (-S*)^e4 with the
// four exponents Boolean functions of the adjacent extended bits and 0^0 = 1.
// Exactly one exponent fires per stage, so the value matches the index form
// bit for bit.
inline Sequence generate_exponent_form(const GeneratorSpec& spec, int r, int s) {
    spec.validate();
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("generate: r and s must be 0 or 1");
    const detail::StageTables t(spec);
    const int n = spec.n;
    Sequence out(spec.length());
    for (std::uint64_t v = 0; v < out.size(); ++v) {
        int prev = r;
        cplx acc{1.0, 0.0};
        for (int k = 0; k <= n; ++k) {
            const int x = prev;
            const int y = (k == n) ? s : ((v & t.mask[k + 1]) ? 1 : 0);
            const bool e1 = !x && !y;
            const bool e2 = x && y;
            const bool e3 = !x && y;
            const bool e4 = x && !y;
            if (e1) acc *= t.ent[k][0];
            if (e2) acc *= t.ent[k][3];
            if (e3) acc *= t.ent[k][1];
            if (e4) acc *= t.ent[k][2];
            prev = y;
        }
        out[v] = acc;
    }
    return out;
}

inline Sequence generate_exponent_form(const GeneratorSpec& spec) {
    return generate_exponent_form(spec, spec.r, spec.s);
}

// Binary Golay kernel: the +-1 sequence with sign exponent
// r n_{P(1)} + sum n_{P(k)} n_{P(k+1)} + n_{P(N)} s, computed by integer
// parity only.
inline Sequence golay_binary(int n, const Permutation& perm, int r, int s) {
    if (n < 0 || n > 30) throw std::invalid_argument("golay_binary: n must be in 0..30");
    if (perm.size() != n) throw std::invalid_argument("golay_binary: permutation size must equal n");
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("golay_binary: r and s must be 0 or 1");
    std::vector<std::uint64_t> mask(n + 2, 0);
    for (int k = 1; k <= n; ++k) mask[k] = std::uint64_t{1} << (perm(k) - 1);
    Sequence out(std::uint64_t{1} << n);
    for (std::uint64_t v = 0; v < out.size(); ++v) {
        int parity = 0;
        int prev = r;
        for (int k = 0; k <= n; ++k) {
            const int next = (k == n) ? s : ((v & mask[k + 1]) ? 1 : 0);
            parity ^= prev & next;
            prev = next;
        }
        out[v] = parity ? cplx{-1.0, 0.0} : cplx{1.0, 0.0};
    }
    return out;
}

// Closed algebraic form: element(n) = C G(n) prod_k t1^(x y) t2^y t3^x with
// C = prod C_k, t1 = |C_k/S_k|^2, t2 = S_k/C_k, t3 = -S_k*/C_k and G the
// binary Golay kernel over the same extended bits. Requires every C_k and S_k
// nonzero; agrees with the index form up to roundoff.
inline Sequence generate_algebraic_form(const GeneratorSpec& spec, int r, int s) {
    spec.validate();
    if (r < 0 || r > 1 || s < 0 || s > 1)
        throw std::invalid_argument("generate: r and s must be 0 or 1");
    const int n = spec.n;
    for (const auto& u : spec.matrices)
        if (u.c == cplx{} || u.s == cplx{})
            throw std::domain_error("algebraic form requires nonzero C_k and S_k");
    cplx c_prod{1.0, 0.0};
    std::vector<double> t1(n + 1);
    std::vector<cplx> t2(n + 1), t3(n + 1);
    for (int k = 0; k <= n; ++k) {
        const auto& u = spec.matrices[k];
        c_prod *= u.c;
        t1[k] = std::norm(u.c) / std::norm(u.s);
        t2[k] = u.s / u.c;
        t3[k] = -std::conj(u.s) / u.c;
    }
    std::vector<std::uint64_t> mask(n + 2, 0);
    for (int k = 1; k <= n; ++k) mask[k] = std::uint64_t{1} << (spec.perm(k) - 1);
    Sequence out(spec.length());
    for (std::uint64_t v = 0; v < out.size(); ++v) {
        int parity = 0;
        int prev = r;
        cplx acc = c_prod;
        for (int k = 0; k <= n; ++k) {
            const int x = prev;
            const int y = (k == n) ? s : ((v & mask[k + 1]) ? 1 : 0);
            parity ^= x & y;
            if (x && y) acc *= t1[k];
            if (y) acc *= t2[k];
            if (x) acc *= t3[k];
            prev = y;
        }
        out[v] = parity ? -acc : acc;
    }
    return out;
}

inline Sequence generate_algebraic_form(const GeneratorSpec& spec) {
    return generate_algebraic_form(spec, spec.r, spec.s);
}

// Complementary pair (a, b) = rows r=0 of the 2x2 sequence matrix; spec.r and
// spec.s are ignored here.
inline std::pair<Sequence, Sequence> generate_pair(const GeneratorSpec& spec) {
    return {generate_index_form(spec, 0, 0), generate_index_form(spec, 0, 1)};
}

// All four boundary choices. Rows and columns are complementary pairs, and
// the second row is the conjugate reverse of the first up to sign.
struct ComplementaryMatrix {
    std::array<std::array<Sequence, 2>, 2> m;

    const Sequence& entry(int r, int s) const {
        if (r < 0 || r > 1 || s < 0 || s > 1)
            throw std::invalid_argument("matrix entry: indices must be 0 or 1");
        return m[r][s];
    }
};

inline ComplementaryMatrix generate_matrix(const GeneratorSpec& spec) {
    ComplementaryMatrix out;
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) out.m[r][s] = generate_index_form(spec, r, s);
    return out;
}

}  // namespace golay
