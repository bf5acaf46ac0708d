#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bits.hpp"
#include "core.hpp"

namespace golay {

// Aperiodic autocorrelation at every lag -(L-1)..L-1, each computed by the
// defining sum R(k) = sum_n a(n) conj(a(n+k)). Deliberately O(L^2): this is
// the trust anchor the rest of the toolkit is verified against, so there is
// no FFT shortcut to get wrong.
struct AutocorrelationProfile {
    std::size_t length = 0;
    std::vector<cplx> values;  // index lag + (length - 1)

    const cplx& at(std::ptrdiff_t lag) const {
        const auto l = static_cast<std::ptrdiff_t>(length);
        if (lag <= -l || lag >= l)
            throw std::invalid_argument("autocorrelation: lag out of range");
        return values[static_cast<std::size_t>(lag + l - 1)];
    }

    double peak() const { return at(0).real(); }
};

inline AutocorrelationProfile autocorrelation(const Sequence& a) {
    const std::size_t l = a.size();
    if (l == 0) throw std::invalid_argument("autocorrelation: empty sequence");
    AutocorrelationProfile p;
    p.length = l;
    p.values.assign(2 * l - 1, cplx{});
    for (std::ptrdiff_t lag = -(static_cast<std::ptrdiff_t>(l) - 1);
         lag <= static_cast<std::ptrdiff_t>(l) - 1; ++lag) {
        cplx sum{};
        for (std::size_t n = 0; n < l; ++n) {
            const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n) + lag;
            if (m < 0 || m >= static_cast<std::ptrdiff_t>(l)) continue;
            sum += a[n] * std::conj(a[static_cast<std::size_t>(m)]);
        }
        p.values[static_cast<std::size_t>(lag + static_cast<std::ptrdiff_t>(l) - 1)] = sum;
    }
    return p;
}

struct PairVerdict {
    bool complementary = false;
    double peak_sum = 0.0;     // K = R_a(0) + R_b(0)
    double max_offpeak = 0.0;  // max over nonzero lags of |R_a + R_b|
    std::optional<int> standard_bit;  // filled by callers that also classify
};

// Complementarity test: all off-peak sums vanish within tol * K.
inline PairVerdict is_complementary(const Sequence& a, const Sequence& b, double tol = 1e-9) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("is_complementary: empty sequence");
    if (a.size() != b.size())
        throw std::invalid_argument("is_complementary: lengths differ");
    if (!(tol >= 0.0))
        throw std::invalid_argument("is_complementary: tolerance must be nonnegative");
    const auto ra = autocorrelation(a);
    const auto rb = autocorrelation(b);
    PairVerdict v;
    v.peak_sum = ra.peak() + rb.peak();
    const auto l = static_cast<std::ptrdiff_t>(a.size());
    for (std::ptrdiff_t lag = -(l - 1); lag <= l - 1; ++lag) {
        if (lag == 0) continue;
        const double mag = std::abs(ra.at(lag) + rb.at(lag));
        if (mag > v.max_offpeak) v.max_offpeak = mag;
    }
    v.complementary = v.max_offpeak <= tol * v.peak_sum;
    return v;
}

// Standard-pair witness: b(n)/a(n) = const * (-1)^(bit j of n) for exactly one
// bit position j (1-based). Returns that j, or nothing when no single bit
// explains the ratio. Lengths must match and be powers of two.
inline std::optional<int> classify_standard(const Sequence& a, const Sequence& b,
                                            double rel_tol = 1e-9) {
    if (a.size() != b.size())
        throw std::invalid_argument("classify_standard: lengths differ");
    if (a.empty() || !is_power_of_two(a.size()))
        throw std::invalid_argument("classify_standard: length must be a power of two");
    if (a.size() == 1) return std::nullopt;
    for (const auto& z : a)
        if (z == cplx{})
            throw std::domain_error("classify_standard: zero element, ratio undefined");
    const std::size_t l = a.size();
    int n_bits = 0;
    while ((std::size_t{1} << n_bits) < l) ++n_bits;
    std::vector<cplx> ratio(l);
    for (std::size_t n = 0; n < l; ++n) ratio[n] = b[n] / a[n];
    const cplx base = ratio[0];
    const double tol = rel_tol * std::abs(base);
    std::optional<int> found;
    for (int j = 1; j <= n_bits; ++j) {
        bool ok = true;
        for (std::size_t n = 0; n < l && ok; ++n) {
            const cplx want = ((n >> (j - 1)) & 1u) ? -base : base;
            ok = std::abs(ratio[n] - want) <= tol;
        }
        if (ok) {
            if (found) return std::nullopt;  // ambiguous
            found = j;
        }
    }
    return found;
}

inline Sequence conjugate_reverse(const Sequence& a) {
    Sequence out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) out[n] = std::conj(a[a.size() - 1 - n]);
    return out;
}

}  // namespace golay
