#include <gtest/gtest.h>

#include <filesystem>

#include "oracles.hpp"
#include "simdiag/io.hpp"

using namespace simdiag;

namespace {

const std::filesystem::path kData = SIMDIAG_TEST_DATA;

std::string expect_format_error(std::string_view text, std::optional<double> tol = 1e-8) {
    try {
        parse_matrix_set(text, tol);
    } catch (const FormatError& e) {
        return e.what();
    }
    ADD_FAILURE() << "no FormatError for: " << text;
    return {};
}

}  // namespace

TEST(MatrixSetFile, CanonicalFilesRoundTripBitIdentically) {
    for (const char* name : {"complex_pair.json", "kernel_deficit.json", "asymmetric.json"}) {
        const std::string text = read_text_file(kData / name);
        EXPECT_EQ(format_matrix_set(parse_matrix_set(text, std::nullopt)), text) << name;
    }
    for (const char* name : {"tensor_diagonal.json", "tensor_kernel_deficit.json", "tensor_noncommutative.json"}) {
        const std::string text = read_text_file(kData / name);
        EXPECT_EQ(format_structure_tensor(parse_structure_tensor(text)), text) << name;
    }
}

TEST(MatrixSetFile, Metadata) {
    const MatrixSet s = read_matrix_set(kData / "complex_pair.json", 1e-8);
    EXPECT_EQ(s.name.value_or(""), "complex-pair");
    EXPECT_TRUE(s.provenance.has_value());
    EXPECT_FALSE(s.seed.has_value());
    EXPECT_EQ(s.role, "family");
    ASSERT_EQ(s.m(), 2u);
    EXPECT_EQ(s.matrices[0](1, 1), Complex(1.0));
}

TEST(MatrixSetFile, RandomRoundTripIsExact) {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixSet s;
        const int n = rng.integer(1, 5), m = rng.integer(1, 3);
        for (int j = 0; j < m; ++j) {
            ComplexMatrix a = rng.symmetric(n) * std::pow(10.0, rng.integer(-30, 30));
            if (trial % 5 == 0) a(0, 0) = Complex(-0.0, 1e-300);
            s.matrices.push_back(a);
        }
        if (trial % 2) s.seed = static_cast<std::uint64_t>(trial) * 1234567891011ULL;
        if (trial % 3 == 0) s.name = "case \"" + std::to_string(trial) + "\"\n";
        const std::string text = format_matrix_set(s);
        const MatrixSet back = parse_matrix_set(text, 1e-8);
        ASSERT_EQ(back.m(), s.m());
        for (std::size_t j = 0; j < s.m(); ++j) EXPECT_EQ(back.matrices[j], s.matrices[j]);
        EXPECT_EQ(back.seed, s.seed);
        EXPECT_EQ(back.name, s.name);
        EXPECT_EQ(format_matrix_set(back), text);
    }
}

TEST(MatrixSetFile, NegativeZeroIsNormalized) {
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(1.0), "1");
}

TEST(MatrixSetFile, ErrorPaths) {
    EXPECT_NE(expect_format_error(read_text_file(kData / "malformed.json")).find("line"), std::string::npos);
    EXPECT_NE(expect_format_error(read_text_file(kData / "asymmetric.json")).find("symmetric"), std::string::npos);
    // Asymmetric is fine when symmetry is not checked.
    EXPECT_NO_THROW(parse_matrix_set(read_text_file(kData / "asymmetric.json"), std::nullopt));

    const std::string head = R"({"format": "simdiag.matrix-set", "version": 1, )";
    expect_format_error(R"({"format": "other", "version": 1, "n": 1, "m": 1, "matrices": [[[[1, 0]]]]})");
    expect_format_error(head + R"("n": 2, "m": 1, "matrices": [[[[1, 0]]]]})");                  // shape
    expect_format_error(head + R"("n": 1, "m": 2, "matrices": [[[[1, 0]]]]})");                  // count
    expect_format_error(head + R"("n": 1, "m": 1, "matrices": [[[[1, 0, 3]]]]})");               // pair
    expect_format_error(head + R"("n": 1, "m": 1, "matrices": [[[["1", 0]]]]})");                // number
    expect_format_error(head + R"("n": 1, "m": 0, "matrices": []})");                            // empty
    expect_format_error(head + R"("role": "mystery", "n": 1, "m": 1, "matrices": [[[[1, 0]]]]})");
    expect_format_error(R"({"format": "simdiag.matrix-set", "version": 7, "n": 1, "m": 1, "matrices": [[[[1, 0]]]]})");
    EXPECT_THROW(read_matrix_set(kData / "does_not_exist.json", 1e-8), FormatError);
}

TEST(StructureTensorFile, ParseAndErrors) {
    const StructureTensor t = read_structure_tensor(kData / "tensor_diagonal.json");
    EXPECT_EQ(t.n, 3u);
    EXPECT_EQ(t.at(0, 0, 1), Complex(2.0));
    EXPECT_EQ(t.at(1, 1, 2), Complex(3.0));
    EXPECT_THROW(parse_structure_tensor(R"({"format": "simdiag.structure-tensor", "version": 1, "n": 2, "entries": []})"),
                 FormatError);
    EXPECT_THROW(parse_structure_tensor("{"), FormatError);
}
