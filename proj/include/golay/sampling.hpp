#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "constellation.hpp"
#include "generator.hpp"

namespace golay {

// All randomized paths (CLI --random, bench, tests) draw from mt19937_64 via
// the helpers below. The distributions are hand-rolled so identical seeds give
// identical streams on every platform; std::uniform_int_distribution makes no
// such promise. The engine name is recorded in output metadata.
inline constexpr const char* kPrngName = "mt19937_64";

class SpecSampler {
public:
    explicit SpecSampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Unbiased draw from 0..bound-1 by rejection.
    std::uint64_t uniform(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("sampler: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = rng_();
        } while (x >= limit);
        return x % bound;
    }

    double uniform_real(double lo, double hi) {
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    Permutation permutation(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(uniform(static_cast<std::uint64_t>(i) + 1));
            std::swap(v[i], v[j]);
        }
        return Permutation(std::move(v));
    }

    MpskParams mpsk_params(int n, int order) {
        MpskParams p;
        p.order = order;
        p.perm = permutation(n);
        p.m.resize(n + 1);
        for (auto& v : p.m) v = static_cast<int>(uniform(order));
        return p;
    }

    GeneratorSpec mpsk_spec(int n, int order) {
        return build_mpsk_spec(mpsk_params(n, order), static_cast<int>(uniform(2)),
                               static_cast<int>(uniform(2)));
    }

    // Single QAM block drawn from 16-QAM, C in the open first quadrant.
    GeneratorSpec qam16_spec(int n) {
        static const cplx quadrant[4] = {{1, 1}, {1, 3}, {3, 1}, {3, 3}};
        const auto target = constellations::qam16();
        const cplx c = quadrant[uniform(4)];
        const cplx s = target.points[uniform(target.points.size())];
        const int pos = static_cast<int>(uniform(static_cast<std::uint64_t>(n) + 1));
        std::vector<int> fillers(n);
        for (auto& f : fillers) f = static_cast<int>(uniform(4));
        return build_qam16_single(target, n, pos, c, s, fillers, permutation(n), 4,
                                  static_cast<int>(uniform(2)), static_cast<int>(uniform(2)));
    }

    // Two QAM blocks drawn from the radius-sqrt(5) points of the diagonal
    // 64-QAM grid; products of any two stay on the grid, so these always
    // build successfully.
    GeneratorSpec qam64_spec(int n) {
        if (n < 1) throw std::invalid_argument("sampler: two-block spec needs n >= 1");
        static const cplx r5[8] = {{2, 1}, {2, -1}, {-2, 1}, {-2, -1},
                                   {1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
        const auto target = constellations::qam64_natural();
        const int k1 = static_cast<int>(uniform(static_cast<std::uint64_t>(n) + 1));
        int k2 = static_cast<int>(uniform(static_cast<std::uint64_t>(n)));
        if (k2 >= k1) ++k2;
        std::vector<int> fillers(n - 1);
        for (auto& f : fillers) f = static_cast<int>(uniform(4));
        return build_qam64_double(target, n, k1, k2, r5[uniform(8)], r5[uniform(8)],
                                  r5[uniform(8)], r5[uniform(8)], fillers, permutation(n), 4,
                                  static_cast<int>(uniform(2)), static_cast<int>(uniform(2)));
    }

    // Unstructured spec: every block entry a random nonzero complex value.
    // Suitable for cross-form and recursion tests, not constellation-bound.
    GeneratorSpec dense_spec(int n) {
        GeneratorSpec spec;
        spec.n = n;
        spec.perm = permutation(n);
        spec.r = static_cast<int>(uniform(2));
        spec.s = static_cast<int>(uniform(2));
        spec.matrices.resize(n + 1);
        for (auto& u : spec.matrices) {
            u.c = nonzero_complex();
            u.s = nonzero_complex();
        }
        spec.validate();
        return spec;
    }

private:
    cplx nonzero_complex() {
        for (;;) {
            const cplx z{uniform_real(-2.0, 2.0), uniform_real(-2.0, 2.0)};
            if (std::abs(z) >= 0.1) return z;  // keep the algebraic form well conditioned
        }
    }

    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

}  // namespace golay
