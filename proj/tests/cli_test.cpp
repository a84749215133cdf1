// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <bit>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "io.hpp"

#include "gpauli/gaussian.hpp"
#include "gpauli/random.hpp"
#include "gpauli/signs.hpp"

namespace gpauli::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Result {
    int code;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "gpauli");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("gpauli_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const json &j) {
        fs::path p = dir_ / name;
        std::ofstream(p) << j.dump();
        return p.string();
    }
    std::string write_spec(const std::string &name, const GaussianSpec &spec) {
        return write(name, io::spec_to_json(spec));
    }

    fs::path dir_;
};

ComplexMatrix two_by_two_j() {
    ComplexMatrix J(2, 2);
    J << 0, 1, -1, 0;
    return J;
}

GaussianSpec rotating_spec(double theta) {
    ComplexMatrix M = ComplexMatrix::Zero(4, 4);
    M.topRightCorner(2, 2) = theta * two_by_two_j();
    M.bottomLeftCorner(2, 2) = theta * two_by_two_j();
    return GaussianSpec::generic(M);
}

TEST_F(CliTest, ElementZeroSpecZBasis) {
    std::string spec = write_spec("zero.json", GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    Result r = run_cli({"element", "--spec", spec, "--bra", "+", "--ket", "+"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_EQ(j["value"], json::array({1.0, 0.0}));
    EXPECT_TRUE(j["provenance"].contains("spec_hash"));
    EXPECT_EQ(j["provenance"]["sign_pair"], "canonical");
    EXPECT_EQ(j["provenance"]["tol"], 1e-8);
}

TEST_F(CliTest, ElementZeroSpecXBasisOffDiagonal) {
    std::string spec = write_spec("zero.json", GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    Result r = run_cli({"element", "--spec", spec, "--basis", "x", "--bra", "+", "--ket", "−"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json v = r.parsed()["value"];
    EXPECT_LT(std::hypot(v[0].get<double>(), v[1].get<double>()), 1e-15);
}

TEST_F(CliTest, ElementCheckAgreesWithOracleAndTable) {
    Result e = run_cli({"element", "-L", "3", "--seed", "9", "--basis", "xyz", "--bra", "+-+", "--ket", "--+", "--check"});
    ASSERT_EQ(e.code, kOk) << e.err;
    json ej = e.parsed();
    EXPECT_TRUE(ej["passed"].get<bool>());
    EXPECT_LE(ej["deviation"].get<double>(), 1e-8);

    Result t = run_cli({"table", "-L", "3", "--seed", "9", "--basis", "xyz"});
    ASSERT_EQ(t.code, kOk) << t.err;
    json tj = t.parsed();
    // Labels are '1' = up with site 1 leftmost.
    auto index = [&](const std::string &label) {
        const json &labels = tj["labels"];
        return static_cast<int>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    EXPECT_EQ(tj["values"][index("101")][index("001")], ej["value"]);
}

TEST_F(CliTest, TableZeroSpecIsIdentity) {
    std::string spec = write_spec("zero.json", GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    Result r = run_cli({"table", "--spec", spec});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_EQ(j["labels"], json::array({"0", "1"}));
    EXPECT_EQ(j["values"][0][0], json::array({1.0, 0.0}));
    EXPECT_EQ(j["values"][1][1], json::array({1.0, 0.0}));
    EXPECT_EQ(j["values"][0][1], json::array({0.0, 0.0}));
}

TEST_F(CliTest, TableCsvLayout) {
    std::string spec = write_spec("zero.json", GaussianSpec::generic(ComplexMatrix::Zero(2, 2)));
    Result r = run_cli({"table", "--spec", spec, "--format", "csv"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(r.out, "bra,0_re,0_im,1_re,1_im\n0,1,0,0,0\n1,0,0,1,0\n");
}

TEST_F(CliTest, TableMixedSpecIsHermitianAndTracesToNormalization) {
    Result r = run_cli({"table", "-L", "3", "--kind", "mixed_hermitian", "--seed", "4", "--basis", "xzy", "--check"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_TRUE(j["hermitian"]["passed"].get<bool>());
    EXPECT_LE(j["oracle_max_dev"].get<double>(), 1e-8);

    Rng rng(4);
    RandomSpecOptions opt;
    opt.kind = OperatorKind::mixed_hermitian;
    Complex z = normalization(random_decomposable_spec(3, rng, opt));
    Complex trace = 0.0;
    for (int b = 0; b < 8; ++b) trace += io::complex_from_json(j["values"][b][b]);
    EXPECT_LT(std::abs(trace - z), 1e-9 * std::abs(z));
}

TEST_F(CliTest, TableParityCellsAreExactlyZero) {
    Result r = run_cli({"table", "-L", "3", "--seed", "2"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    for (int b = 0; b < 8; ++b) {
        for (int k = 0; k < 8; ++k) {
            if ((std::popcount(unsigned(b)) + std::popcount(unsigned(k))) % 2) {
                EXPECT_EQ(j["values"][b][k], json::array({0.0, 0.0}));
            }
        }
    }
}

TEST_F(CliTest, TableGuard) {
    Result r = run_cli({"table", "-L", "8"});
    EXPECT_EQ(r.code, kValidation);
}

TEST_F(CliTest, SignsCounts) {
    EXPECT_EQ(run_cli({"signs", "-L", "2"}).parsed()["count"], 8);
    EXPECT_EQ(run_cli({"signs", "-L", "3"}).parsed()["count"], 32);
    EXPECT_EQ(run_cli({"signs", "-L", "1"}).parsed()["count"], 1);
    EXPECT_EQ(run_cli({"signs", "-L", "7"}).code, kValidation);
}

TEST_F(CliTest, SignsCheckValidatesEveryPair) {
    Result r = run_cli({"signs", "-L", "2", "--check", "--trials", "0"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_TRUE(j["validation"]["all_passed"].get<bool>());
    EXPECT_EQ(j["validation"]["pairs"].size(), 8u);
}

TEST_F(CliTest, SignsExportRoundTrips) {
    json j = run_cli({"signs", "-L", "2"}).parsed();
    for (const json &p : j["pairs"]) {
        SignPair pair = io::pair_from_json(p);
        EXPECT_TRUE(structural_checks(pair).passed());
    }
}

TEST_F(CliTest, VerifyComputationalBasis) {
    Result r = run_cli({"verify", "-L", "2", "--trials", "20"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_LE(j["max_dev"].get<double>(), 1e-9);
    EXPECT_EQ(j["elements"], 20 * 16);
    EXPECT_EQ(j["parity_zero_violations"], 0);
}

TEST_F(CliTest, VerifyRandomAnglesSampled) {
    Result r = run_cli({"verify", "-L", "4", "--basis", "random", "--trials", "2", "--samples", "100"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_LE(r.parsed()["max_dev"].get<double>(), 1e-8);
    Result split = run_cli({"verify", "-L", "3", "--basis", "random-split", "--trials", "3"});
    EXPECT_EQ(split.code, kOk) << split.out;
}

TEST_F(CliTest, VerifyCorruptedPairFailsWithCounterexample) {
    SignPair pair = canonical_pair(2);
    pair.sigma_prime(0, 1) = -pair.sigma_prime(0, 1);
    pair.sigma_prime(1, 0) = -pair.sigma_prime(1, 0);
    pair.p.reset();
    std::string path = write("bad_pair.json", io::pair_to_json(pair));
    Result r = run_cli({"verify", "-L", "2", "--trials", "3", "--pair", path});
    EXPECT_EQ(r.code, kVerificationFailed);
    json j = r.parsed();
    EXPECT_FALSE(j["passed"].get<bool>());
    EXPECT_GT(j["max_dev"].get<double>(), 1e-3);
    EXPECT_EQ(j["worst"]["bra"].get<std::string>().size(), 2u);
    EXPECT_NE(j["worst"]["formula"], j["worst"]["oracle"]);
}

TEST_F(CliTest, VerifyGuard) { EXPECT_EQ(run_cli({"verify", "-L", "7"}).code, kValidation); }

TEST_F(CliTest, AlgebraReports) {
    json three = run_cli({"algebra", "-L", "3"}).parsed();
    EXPECT_EQ(three["closure_dim"], 15);
    EXPECT_TRUE(three["passed"].get<bool>());
    json two = run_cli({"algebra", "-L", "2"}).parsed();
    EXPECT_EQ(two["closure_dim"], 6);
    EXPECT_TRUE(two["l2_table"]["passed"].get<bool>());
    json four = run_cli({"algebra", "-L", "4"}).parsed();
    EXPECT_GT(four["overlap_min_abs"].get<double>(), 1e-8);
    EXPECT_EQ(four["overlaps"].size(), 4u);
}

TEST_F(CliTest, ProbabilityFromCorrelationFile) {
    std::string zero = write("g0.json", json{{"G", {{0, 0}, {0, 0}}}});
    Result r = run_cli({"probability", "--corr", zero, "--config", "+-"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_DOUBLE_EQ(r.parsed()["probability"].get<double>(), 0.25);

    std::string ident = write("g1.json", json{{"G", {{1, 0}, {0, 1}}}});
    EXPECT_NEAR(run_cli({"probability", "--corr", ident, "--config", "++"}).parsed()["probability"].get<double>(), 1.0,
                1e-15);
    EXPECT_NEAR(run_cli({"probability", "--corr", ident, "--config", "--"}).parsed()["probability"].get<double>(), 0.0,
                1e-15);
}

TEST_F(CliTest, ProbabilityRandomStateSumsToOne) {
    Result r = run_cli({"probability", "-L", "4", "--seed", "3"});
    ASSERT_EQ(r.code, kOk) << r.err;
    json j = r.parsed();
    EXPECT_EQ(j["probabilities"].size(), 16u);
    EXPECT_NEAR(j["sum"].get<double>(), 1.0, 1e-9);
}

TEST_F(CliTest, OutputIsDeterministicAndCanGoToAFile) {
    Result a = run_cli({"table", "-L", "2", "--seed", "11", "--basis", "random-ish-not-a-basis"});
    EXPECT_EQ(a.code, kValidation);
    Result b1 = run_cli({"verify", "-L", "3", "--basis", "random", "--trials", "4"});
    Result b2 = run_cli({"verify", "-L", "3", "--basis", "random", "--trials", "4"});
    EXPECT_EQ(b1.out, b2.out);
    fs::path out = dir_ / "table.json";
    Result c = run_cli({"table", "-L", "2", "--seed", "11", "--out", out.string()});
    ASSERT_EQ(c.code, kOk) << c.err;
    EXPECT_TRUE(c.out.empty());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), run_cli({"table", "-L", "2", "--seed", "11"}).out);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, kUsage);
    EXPECT_EQ(run_cli({"element"}).code, kUsage);
    EXPECT_EQ(run_cli({"bogus"}).code, kUsage);

    ComplexMatrix M = ComplexMatrix::Zero(2, 2);
    M(0, 1) = 1.0;
    GaussianSpec bad = GaussianSpec::generic(M);
    std::string bad_path = write_spec("bad.json", bad);
    EXPECT_EQ(run_cli({"element", "--spec", bad_path, "--bra", "+", "--ket", "+"}).code, kValidation);
    EXPECT_EQ(run_cli({"element", "--spec", write("junk.json", json{{"L", 1}}), "--bra", "+", "--ket", "+"}).code,
              kValidation);

    std::string zero = write_spec("zero2.json", GaussianSpec::generic(ComplexMatrix::Zero(4, 4)));
    EXPECT_EQ(run_cli({"element", "--spec", zero, "--bra", "+", "--ket", "++"}).code, kValidation);

    std::string singular = write_spec("singular.json", rotating_spec(std::numbers::pi / 2));
    EXPECT_EQ(run_cli({"element", "--spec", singular, "--bra", "++", "--ket", "++"}).code, kDecomposition);
    std::string branch = write_spec("branch.json", rotating_spec(std::numbers::pi));
    EXPECT_EQ(run_cli({"element", "--spec", branch, "--bra", "++", "--ket", "++"}).code, kBranch);
}

TEST_F(CliTest, HelpIsSuccess) { EXPECT_EQ(run_cli({"--help"}).code, kOk); }

}  // namespace
}  // namespace gpauli::cli
