#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "golay/constellation.hpp"
#include "golay/generator.hpp"
#include "golay/sampling.hpp"
#include "oracle.hpp"

using golay::cplx;
using golay::GeneratorSpec;
using golay::Permutation;
using golay::Sequence;
using golay::Unitary2x2;

namespace {

GeneratorSpec all_ones_spec(int n) {
    GeneratorSpec spec;
    spec.n = n;
    spec.perm = Permutation::identity(n);
    spec.matrices.assign(n + 1, Unitary2x2{{1, 0}, {1, 0}});
    return spec;
}

std::vector<std::pair<cplx, cplx>> oracle_blocks(const GeneratorSpec& spec) {
    std::vector<std::pair<cplx, cplx>> blocks;
    for (const auto& u : spec.matrices) blocks.emplace_back(u.c, u.s);
    return blocks;
}

void expect_seq_near(const Sequence& got, const std::vector<cplx>& want, double tol = 1e-12) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_NEAR(std::abs(got[i] - want[i]), 0.0, tol) << "at index " << i;
}

}  // namespace

TEST(IndexForm, FrozenAllOnesGoldens) {
    // brute-force values for blocks with C = S = 1
    expect_seq_near(generate_index_form(all_ones_spec(1), 0, 0), {{1, 0}, {-1, 0}});
    expect_seq_near(generate_index_form(all_ones_spec(1), 1, 0), {{-1, 0}, {-1, 0}});
    expect_seq_near(generate_index_form(all_ones_spec(2), 0, 0),
                    {{1, 0}, {-1, 0}, {-1, 0}, {-1, 0}});
}

TEST(IndexForm, MatchesBruteForceOracle) {
    golay::SpecSampler sampler(0xA11CE5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % 6;
        const auto spec = sampler.dense_spec(n);
        const auto got = generate_index_form(spec);
        const auto want =
            oracle::boolean_product(spec.n, spec.perm.forward(), oracle_blocks(spec), spec.r, spec.s);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            EXPECT_LT(std::abs(got[i] - want[i]), 1e-12 * (1.0 + std::abs(want[i])));
    }
}

TEST(IndexForm, DegenerateLengthOne) {
    GeneratorSpec spec;
    spec.n = 0;
    spec.matrices = {Unitary2x2{{0.5, 0.5}, {2, -1}}};
    const auto m00 = generate_index_form(spec, 0, 0);
    const auto m01 = generate_index_form(spec, 0, 1);
    const auto m10 = generate_index_form(spec, 1, 0);
    const auto m11 = generate_index_form(spec, 1, 1);
    ASSERT_EQ(m00.size(), 1u);
    EXPECT_EQ(m00[0], (cplx{0.5, 0.5}));
    EXPECT_EQ(m01[0], (cplx{2, -1}));
    EXPECT_EQ(m10[0], (cplx{-2, -1}));
    EXPECT_EQ(m11[0], (cplx{0.5, -0.5}));
}

TEST(IndexForm, RejectsInvalidSpecs) {
    auto spec = all_ones_spec(2);
    spec.matrices.pop_back();
    EXPECT_THROW(generate_index_form(spec), std::invalid_argument);  // wrong block count

    spec = all_ones_spec(2);
    spec.perm = Permutation::identity(1);
    EXPECT_THROW(generate_index_form(spec), std::invalid_argument);  // perm size mismatch

    spec = all_ones_spec(2);
    spec.matrices[1] = Unitary2x2{{0, 0}, {0, 0}};
    EXPECT_THROW(generate_index_form(spec), std::invalid_argument);  // both entries zero

    spec = all_ones_spec(2);
    spec.r = 2;
    EXPECT_THROW(generate_index_form(spec), std::invalid_argument);

    spec = all_ones_spec(2);
    EXPECT_THROW(generate_index_form(spec, 0, -1), std::invalid_argument);
}

TEST(ExponentForm, BitIdenticalToIndexForm) {
    golay::SpecSampler sampler(0xBEEF);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + trial % 7;
        const auto spec = sampler.dense_spec(n);
        const auto a = generate_index_form(spec);
        const auto b = generate_exponent_form(spec);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].real() - b[i].real(), 0.0);
            EXPECT_EQ(a[i].imag() - b[i].imag(), 0.0);
        }
    }
}

TEST(AlgebraicForm, MatchesIndexFormWithinRelativeTolerance) {
    golay::SpecSampler sampler(0xCAFE);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + trial % 7;
        const auto spec = sampler.dense_spec(n);
        const auto a = generate_index_form(spec);
        const auto b = generate_algebraic_form(spec);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            EXPECT_LT(std::abs(a[i] - b[i]), 1e-10 * std::abs(a[i])) << "at index " << i;
    }
}

TEST(AlgebraicForm, RejectsZeroEntries) {
    auto spec = all_ones_spec(1);
    spec.matrices[0].s = 0;
    EXPECT_THROW(generate_algebraic_form(spec), std::domain_error);
    spec = all_ones_spec(1);
    spec.matrices[1].c = 0;
    EXPECT_THROW(generate_algebraic_form(spec), std::domain_error);
}

TEST(GolayBinary, FrozenGoldens) {
    const auto id2 = Permutation::identity(2);
    expect_seq_near(golay_binary(2, id2, 0, 0), {{1, 0}, {1, 0}, {1, 0}, {-1, 0}});
    expect_seq_near(golay_binary(2, id2, 0, 1), {{1, 0}, {1, 0}, {-1, 0}, {1, 0}});
    expect_seq_near(golay_binary(2, id2, 1, 0), {{1, 0}, {-1, 0}, {1, 0}, {1, 0}});
    expect_seq_near(golay_binary(2, id2, 1, 1), {{1, 0}, {-1, 0}, {-1, 0}, {-1, 0}});
}

TEST(GolayBinary, SignExponentMatchesDigitProducts) {
    // independent recomputation straight from the defining exponent
    golay::SpecSampler sampler(0x60A1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 5;
        const auto perm = sampler.permutation(n);
        const int r = trial & 1, s = (trial >> 1) & 1;
        const auto g = golay_binary(n, perm, r, s);
        for (std::uint64_t v = 0; v < g.size(); ++v) {
            int e = r * golay::bit(v, perm(1), n) + golay::bit(v, perm(n), n) * s;
            for (int k = 1; k < n; ++k)
                e += golay::bit(v, perm(k), n) * golay::bit(v, perm(k + 1), n);
            EXPECT_EQ(g[v].real(), (e & 1) ? -1.0 : 1.0);
            EXPECT_EQ(g[v].imag(), 0.0);
        }
    }
}

TEST(GeneratePair, BuilderGoldenPair) {
    golay::MpskParams p;
    p.order = 2;
    p.m = {0, 0, 0};
    p.perm = Permutation::identity(2);
    const auto spec = build_mpsk_spec(p);
    const auto [a, b] = generate_pair(spec);
    expect_seq_near(a, {{1, 0}, {1, 0}, {1, 0}, {-1, 0}});
    expect_seq_near(b, {{1, 0}, {1, 0}, {-1, 0}, {1, 0}});
}

TEST(GeneratePair, IgnoresSpecBoundaryBits) {
    golay::SpecSampler sampler(0x5EED);
    auto spec = sampler.dense_spec(3);
    spec.r = 1;
    spec.s = 1;
    const auto [a, b] = generate_pair(spec);
    const auto m00 = generate_index_form(spec, 0, 0);
    const auto m01 = generate_index_form(spec, 0, 1);
    EXPECT_EQ(a, m00);
    EXPECT_EQ(b, m01);
}

TEST(GenerateMatrix, EntriesMatchBoundaryBits) {
    golay::SpecSampler sampler(0x1234);
    const auto spec = sampler.dense_spec(3);
    const auto mat = generate_matrix(spec);
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) EXPECT_EQ(mat.entry(r, s), generate_index_form(spec, r, s));
    EXPECT_THROW(mat.entry(2, 0), std::invalid_argument);
}

TEST(GenerateMatrix, BuilderGoldenSecondRow) {
    golay::MpskParams p;
    p.order = 2;
    p.m = {0, 0, 0};
    p.perm = Permutation::identity(2);
    const auto mat = generate_matrix(build_mpsk_spec(p));
    expect_seq_near(mat.entry(1, 0), {{-1, 0}, {1, 0}, {-1, 0}, {-1, 0}});
    expect_seq_near(mat.entry(1, 1), {{-1, 0}, {1, 0}, {1, 0}, {1, 0}});
}

TEST(GenerateMatrix, QamBlockFrozenGolden) {
    // single 16-QAM block at slot 0, unit filler at slot 1
    GeneratorSpec spec;
    spec.n = 1;
    spec.perm = Permutation::identity(1);
    spec.matrices = {Unitary2x2{{1, 1}, {3, 1}}, Unitary2x2{{1, 0}, {1, 0}}};
    const auto mat = generate_matrix(spec);
    expect_seq_near(mat.entry(0, 0), {{1, 1}, {-3, -1}});
    expect_seq_near(mat.entry(0, 1), {{1, 1}, {3, 1}});
    expect_seq_near(mat.entry(1, 0), {{-3, 1}, {-1, 1}});
    expect_seq_near(mat.entry(1, 1), {{-3, 1}, {1, -1}});
}

TEST(Recursion, AppendingAStageConcatenatesScaledHalves) {
    // a' = (a * U_{00}, b * U_{10}), b' = (a * U_{01}, b * U_{11}) must hold
    // bit for bit when the new stage reads the new most significant digit.
    golay::SpecSampler sampler(0xFEED5);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto small = sampler.dense_spec(n);
            GeneratorSpec big = small;
            big.n = n + 1;
            auto images = small.perm.forward();
            images.push_back(n + 1);
            big.perm = Permutation{images};
            const Unitary2x2 extra{{sampler.uniform_real(-2, 2), sampler.uniform_real(-2, 2)},
                                   {sampler.uniform_real(-2, 2), sampler.uniform_real(-2, 2)}};
            big.matrices.push_back(extra);

            const auto a = generate_index_form(small, 0, 0);
            const auto b = generate_index_form(small, 0, 1);
            const auto a2 = generate_index_form(big, 0, 0);
            const auto b2 = generate_index_form(big, 0, 1);
            const std::uint64_t half = std::uint64_t{1} << n;
            for (std::uint64_t i = 0; i < half; ++i) {
                EXPECT_EQ(a2[i], a[i] * extra.entry(0, 0));
                EXPECT_EQ(a2[half + i], b[i] * extra.entry(1, 0));
                EXPECT_EQ(b2[i], a[i] * extra.entry(0, 1));
                EXPECT_EQ(b2[half + i], b[i] * extra.entry(1, 1));
            }
        }
    }
}

TEST(Unitary, EntrySelectionAndKFactor) {
    const Unitary2x2 u{{1, 2}, {3, -4}};
    EXPECT_EQ(u.entry(0, 0), (cplx{1, 2}));
    EXPECT_EQ(u.entry(0, 1), (cplx{3, -4}));
    EXPECT_EQ(u.entry(1, 0), (cplx{-3, -4}));
    EXPECT_EQ(u.entry(1, 1), (cplx{1, -2}));
    EXPECT_DOUBLE_EQ(u.k_factor(), 30.0);
    EXPECT_THROW(u.entry(0, 2), std::invalid_argument);
}
