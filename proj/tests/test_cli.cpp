#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "simdiag/io.hpp"
#include "simdiag/sdc.hpp"

using namespace simdiag;
namespace fs = std::filesystem;

namespace {

const fs::path kData = SIMDIAG_TEST_DATA;

struct CliResult {
    int code = -1;
    std::string out;
};

fs::path scratch() {
    const fs::path d = fs::temp_directory_path() / ("simdiag_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

CliResult run(const std::string& args, const std::string& env = "") {
    const fs::path out = scratch() / "stdout.txt";
    const std::string cmd = env + " \"" + std::string(SIMDIAG_CLI_PATH) + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out);
    return r;
}

std::string data(const char* name) { return "\"" + (kData / name).string() + "\""; }

}  // namespace

TEST(Cli, DecideComplexPair) {
    const CliResult r = run("decide --json " + data("complex_pair.json"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("verdict"), "SDC");
    EXPECT_EQ(doc.at("r"), 2);
    EXPECT_LE(doc.at("residual").get<double>(), 1e-10);
}

TEST(Cli, DecideKernelDeficit) {
    const CliResult r = run("decide --json " + data("kernel_deficit.json"));
    ASSERT_EQ(r.code, 1) << r.out;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("reason"), "kernel-deficit");
    EXPECT_EQ(doc.at("kernel_dim"), 0);
    EXPECT_EQ(doc.at("expected_kernel_dim"), 1);

    const CliResult text = run("decide " + data("kernel_deficit.json"));
    EXPECT_EQ(text.code, 1);
    EXPECT_NE(text.out.find("kernel-deficit"), std::string::npos) << text.out;
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run("decide " + data("asymmetric.json")).code, 2);
    const CliResult bad = run("decide " + data("malformed.json"));
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("line"), std::string::npos) << bad.out;
    EXPECT_EQ(run("decide " + data("missing.json")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("decide --tol-rank -1 " + data("complex_pair.json")).code, 2);
}

TEST(Cli, TransformWritesVerifiedCertificate) {
    const fs::path out = scratch() / "transform.json";
    const CliResult r = run("transform " + data("complex_pair.json") + " \"" + out.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.out;
    const MatrixSet t = read_matrix_set(out, std::nullopt);
    EXPECT_EQ(t.role, "transform");
    ASSERT_EQ(t.m(), 3u);
    const MatrixSet fam = read_matrix_set(kData / "complex_pair.json", 1e-8);
    EXPECT_TRUE(verify_certificate(LinearPencil(fam.matrices), t.matrices[0], ToleranceConfig{}).pass);
}

TEST(Cli, SynthRoundTrip) {
    const fs::path out = scratch() / "synth.json";
    CliResult r = run("synth --n 4 --m 3 --r 4 --seed 7 --kind sdc -o \"" + out.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(out.string() + ".truth.json"));
    EXPECT_EQ(run("decide \"" + out.string() + "\"").code, 0);

    r = run("synth --n 2 --m 2 --r 2 --seed 0 --kind defective -o \"" + out.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.out;
    const CliResult d = run("decide --json \"" + out.string() + "\"");
    EXPECT_EQ(d.code, 1);
    EXPECT_EQ(nlohmann::json::parse(d.out).at("reason"), "defective");

    EXPECT_EQ(run("synth --n 2 --m 2 --r 3 --seed 0 -o \"" + out.string() + "\"").code, 2);
}

TEST(Cli, Evolution) {
    EXPECT_EQ(run("evolution " + data("tensor_diagonal.json")).code, 0);
    EXPECT_EQ(run("evolution " + data("tensor_kernel_deficit.json")).code, 1);
    const CliResult nc = run("evolution " + data("tensor_noncommutative.json"));
    EXPECT_EQ(nc.code, 2);
    EXPECT_NE(nc.out.find("(1, 2, 1)"), std::string::npos) << nc.out;
}

TEST(Cli, EnvironmentToleranceOverride) {
    // A hopelessly tight residual tolerance turns the verified SDC case into a numerical failure.
    const CliResult strict = run("decide --json " + data("complex_pair.json"), "SDC_DEFAULT_TOL=1e-300");
    EXPECT_EQ(strict.code, 1) << strict.out;
    EXPECT_EQ(run("decide " + data("complex_pair.json"), "SDC_DEFAULT_TOL=nonsense").code, 2);
    // An explicit flag wins over the environment.
    EXPECT_EQ(run("decide --tol-residual 1e-8 " + data("complex_pair.json"), "SDC_DEFAULT_TOL=1e-300").code, 0);
}
