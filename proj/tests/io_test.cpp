#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "golay/golay.hpp"

using golay::cplx;
using golay::GeneratorSpec;
using golay::Sequence;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("golay_io_test_" + name);
}

GeneratorSpec sample_spec() {
    GeneratorSpec spec;
    spec.n = 2;
    spec.perm = golay::Permutation({2, 1});
    spec.matrices = {{{1, 0}, {0, 1}}, {{0.5, -0.25}, {-1, 2}}, {{1, 1}, {1, -3}}};
    spec.r = 1;
    spec.s = 0;
    return spec;
}

}  // namespace

TEST(ComplexText, Formatting) {
    EXPECT_EQ(golay::format_complex_text({1, 0}), "1+0i");
    EXPECT_EQ(golay::format_complex_text({-1, -1}), "-1-1i");
    EXPECT_EQ(golay::format_complex_text({0.5, -0.25}), "0.5-0.25i");
    EXPECT_EQ(golay::format_complex_text({0, 1}), "0+1i");
    EXPECT_EQ(golay::format_complex_text({-0.0, -0.0}), "0+0i");
    EXPECT_EQ(golay::format_csv_line({-0.0, 1.0}), "0,1");
}

TEST(SpecJson, RoundTrip) {
    const auto spec = sample_spec();
    const auto j = golay::spec_to_json(spec);
    EXPECT_EQ(j.at("format"), golay::kSpecFormat);
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("perm"), (std::vector<int>{2, 1}));
    const auto back = golay::spec_from_json(j);
    EXPECT_EQ(back.n, spec.n);
    EXPECT_EQ(back.perm.forward(), spec.perm.forward());
    EXPECT_EQ(back.r, spec.r);
    EXPECT_EQ(back.s, spec.s);
    ASSERT_EQ(back.matrices.size(), spec.matrices.size());
    for (size_t k = 0; k < spec.matrices.size(); ++k) {
        EXPECT_EQ(back.matrices[k].c, spec.matrices[k].c);  // exact through JSON doubles
        EXPECT_EQ(back.matrices[k].s, spec.matrices[k].s);
    }
    EXPECT_EQ(golay::spec_to_json(back).dump(), j.dump());
}

TEST(SpecJson, RejectsMalformed) {
    auto j = golay::spec_to_json(sample_spec());
    auto bad = j;
    bad["format"] = "golay-spec/9";
    EXPECT_THROW(golay::spec_from_json(bad), std::invalid_argument);
    bad = j;
    bad.erase("matrices");
    EXPECT_THROW(golay::spec_from_json(bad), std::invalid_argument);
    bad = j;
    bad["matrices"][0]["c"] = {1.0};  // wrong arity
    EXPECT_THROW(golay::spec_from_json(bad), std::invalid_argument);
    bad = j;
    bad["matrices"].erase(2);  // n+1 blocks required
    EXPECT_THROW(golay::spec_from_json(bad), std::invalid_argument);
    bad = j;
    bad["r"] = 2;
    EXPECT_THROW(golay::spec_from_json(bad), std::invalid_argument);
    EXPECT_THROW(golay::spec_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(SequenceCsv, RoundTripIsExact) {
    const Sequence seq{
        {1.0 / 3.0, -2.0 / 7.0}, {1e-17, 1e300}, {-0.0, 0.0}, {-123456.75, 3.5e-5}};
    const auto text = golay::sequence_to_csv(seq);
    const auto back = golay::sequence_from_csv(text);
    ASSERT_EQ(back.size(), seq.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        EXPECT_EQ(back[i].real(), seq[i].real());
        EXPECT_EQ(back[i].imag(), seq[i].imag());
    }
}

TEST(SequenceCsv, SkipsCommentsAndBlankLines) {
    const auto seq = golay::sequence_from_csv("# header\n1,0\n\n-1,0.5\n# tail\n");
    ASSERT_EQ(seq.size(), 2u);
    EXPECT_EQ(seq[0], (cplx{1, 0}));
    EXPECT_EQ(seq[1], (cplx{-1, 0.5}));
}

TEST(SequenceCsv, RejectsGarbage) {
    EXPECT_THROW(golay::sequence_from_csv("1,2,3\n"), std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_csv("1\n"), std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_csv("one,two\n"), std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_csv("# only comments\n"), std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_csv(""), std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_csv("1,inf\n"), std::invalid_argument);
}

TEST(SequenceJson, ElementsRoundTrip) {
    const Sequence seq{{0.125, -8}, {3, 4}};
    const auto j = golay::sequence_to_json_elements(seq);
    const auto back = golay::sequence_from_json_elements(j);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0], seq[0]);
    EXPECT_EQ(back[1], seq[1]);
    EXPECT_THROW(golay::sequence_from_json_elements(nlohmann::json::parse("[[1]]")),
                 std::invalid_argument);
    EXPECT_THROW(golay::sequence_from_json_elements(nlohmann::json::parse("[]")),
                 std::invalid_argument);
}

TEST(LoadSequence, SniffsCsvAndJsonShapes) {
    const Sequence seq{{1, 2}, {-3, 0.5}};

    const auto csv_path = temp_file("seq.csv");
    golay::write_file(csv_path.string(), golay::sequence_to_csv(seq));
    EXPECT_EQ(golay::load_sequence(csv_path.string()), seq);

    const auto arr_path = temp_file("seq_arr.json");
    golay::write_file(arr_path.string(), golay::sequence_to_json_elements(seq).dump());
    EXPECT_EQ(golay::load_sequence(arr_path.string()), seq);

    const auto obj_path = temp_file("seq_obj.json");
    nlohmann::json obj;
    obj["format"] = golay::kSeqFormat;
    obj["elements"] = golay::sequence_to_json_elements(seq);
    golay::write_file(obj_path.string(), obj.dump());
    EXPECT_EQ(golay::load_sequence(obj_path.string()), seq);

    EXPECT_THROW(golay::load_sequence("/nonexistent/golay_seq.csv"), std::runtime_error);

    fs::remove(csv_path);
    fs::remove(arr_path);
    fs::remove(obj_path);
}

TEST(LoadConstellation, BareArrayAndObjectForms) {
    const auto bare = temp_file("const_bare.json");
    golay::write_file(bare.string(), "[[1,0],[-1,0]]");
    auto c = golay::load_constellation(bare.string());
    EXPECT_EQ(c.points.size(), 2u);
    EXPECT_TRUE(c.contains({1, 0}));

    const auto obj = temp_file("const_obj.json");
    golay::write_file(obj.string(), R"({"name":"axis","tol":1e-6,"points":[[0,1],[0,-1]]})");
    c = golay::load_constellation(obj.string());
    EXPECT_EQ(c.name, "axis");
    EXPECT_EQ(c.tol, 1e-6);
    EXPECT_TRUE(c.contains({0, 1 + 1e-7}));

    const auto dup = temp_file("const_dup.json");
    golay::write_file(dup.string(), "[[1,0],[1,0]]");
    EXPECT_THROW(golay::load_constellation(dup.string()), std::invalid_argument);

    fs::remove(bare);
    fs::remove(obj);
    fs::remove(dup);
}

TEST(ReportJson, VerdictShape) {
    golay::PairVerdict v;
    v.complementary = true;
    v.peak_sum = 8;
    v.max_offpeak = 1e-16;
    v.standard_bit = 2;
    auto j = golay::verdict_to_json(v);
    EXPECT_EQ(j.at("format"), golay::kReportFormat);
    EXPECT_EQ(j.at("kind"), "verify");
    EXPECT_EQ(j.at("complementary"), true);
    EXPECT_EQ(j.at("standard_bit"), 2);
    v.standard_bit.reset();
    j = golay::verdict_to_json(v);
    EXPECT_TRUE(j.at("standard_bit").is_null());
}

TEST(ReportJson, CensusShape) {
    golay::CensusOptions opt;
    opt.alphabet = {{1, 0}, {-1, 0}};
    opt.alphabet_name = "binary";
    opt.length = 2;
    opt.coverage_order = 2;
    const auto rep = golay::census_pairs(opt);
    const auto j = golay::census_to_json(rep);
    EXPECT_EQ(j.at("kind"), "census");
    EXPECT_EQ(j.at("alphabet"), "binary");
    EXPECT_EQ(j.at("pairs_ordered"), 8);
    ASSERT_TRUE(j.contains("coverage"));
    EXPECT_EQ(j.at("coverage").at("census_only_ordered"), 0);

    opt.coverage_order = 0;
    const auto no_cov = golay::census_to_json(golay::census_pairs(opt));
    EXPECT_TRUE(no_cov.at("coverage").is_null());
}

TEST(ReportJson, EnumerationShape) {
    golay::EnumerationGrid grid;
    grid.n = 1;
    const auto res = golay::enumerate_generator(grid);
    const auto j = golay::enumeration_to_json(grid, res);
    EXPECT_EQ(j.at("kind"), "enumeration");
    EXPECT_EQ(j.at("grid_points"), 4);
    EXPECT_EQ(j.at("distinct_sequences"), 4);
    EXPECT_EQ(j.at("all_complementary"), true);
}

TEST(ReportJson, QamSearchShape) {
    golay::QamSearchOptions opt;
    opt.target = golay::constellations::qam16();
    opt.n = 2;
    opt.positions = {0};
    opt.candidates = {{1, 1}, {3, 1}};
    const auto j = golay::qam_search_to_json(opt, golay::search_qam_matrices(opt));
    EXPECT_EQ(j.at("kind"), "qam-search");
    EXPECT_EQ(j.at("tried"), 4);
    EXPECT_EQ(j.at("admissible_count"), 4);
    ASSERT_EQ(j.at("admissible").size(), 4u);
    EXPECT_EQ(j.at("admissible")[0].at("blocks")[0].at("c"), nlohmann::json({1.0, 1.0}));
}

TEST(Files, WriteThenReadBack) {
    const auto p = temp_file("blob.txt");
    golay::write_file(p.string(), "hello\n");
    EXPECT_EQ(golay::read_file(p.string()), "hello\n");
    EXPECT_THROW(golay::read_file("/nonexistent/golay_blob.txt"), std::runtime_error);
    EXPECT_THROW(golay::write_file("/nonexistent_dir_xyz/file.txt", "x"), std::runtime_error);
    fs::remove(p);
}
