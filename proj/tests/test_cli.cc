// Copyright 2026 The Schwinger Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "json.hpp"

namespace schwinger::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("schwinger_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }

    int call(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run(args, out_, err_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    static std::string slurp(const std::string &p) {
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    static nlohmann::json load(const std::string &p) {
        return nlohmann::json::parse(slurp(p));
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(CliTest, SquareNullifierReport) {
    ASSERT_EQ(call({"nullifiers", "--graph", "builtin:square4x2", "--r-grid", "0.05,0.1", "--out", path("n.json")}), kExitOk)
        << err_.str();
    const nlohmann::json r = load(path("n.json"));
    ASSERT_EQ(r["exact"].size(), 4u);
    EXPECT_EQ(r["exact"][3]["expression"], "Jy(1,5) + Jy(2,6) + Jy(3,7) + Jy(4,8)");
    for (const auto &e : r["exact"]) {
        ASSERT_EQ(e["verification"].size(), 2u);
        for (const auto &row : e["verification"]) {
            EXPECT_LT(row["variance"].get<double>(), 1e-8);
        }
    }
    EXPECT_EQ(r["kernel_dimension"], 64);
}

TEST_F(CliTest, RingPipeline) {
    ASSERT_EQ(call({"simulate", "--graph", "builtin:ring4x2", "--r", "0.05", "--cutoff", "10", "--out", path("s.json")}),
              kExitOk);
    ASSERT_EQ(call({"postselect", "--in", path("s.json"), "--j", "0.5,0.5,0.5,0.5", "--canonical", "--out",
                    path("q.json")}),
              kExitOk)
        << err_.str();
    ASSERT_EQ(call({"entangle", "--in", path("q.json"), "--out", path("e.json")}), kExitOk) << err_.str();
    EXPECT_EQ(load(path("e.json"))["classification"], "genuine_multipartite");

    const nlohmann::json q = load(path("q.json"));
    const double c = 1 / (2 * std::sqrt(3.0));
    const std::map<std::vector<double>, double> want{
        {{0.5, -0.5, -0.5, 0.5}, c},       {{-0.5, 0.5, 0.5, -0.5}, c}, {{0.5, 0.5, -0.5, -0.5}, c},
        {{-0.5, -0.5, 0.5, 0.5}, c},       {{0.5, -0.5, 0.5, -0.5}, -2 * c},
        {{-0.5, 0.5, -0.5, 0.5}, -2 * c}};
    // Fix the global phase on the largest entry.
    double sign = 0;
    for (const auto &a : q["amplitudes"]) {
        if (a["m"].get<std::vector<double>>() == std::vector<double>{0.5, -0.5, 0.5, -0.5}) {
            sign = a["re"].get<double>() < 0 ? 1 : -1;
        }
    }
    ASSERT_NE(sign, 0);
    for (const auto &a : q["amplitudes"]) {
        const auto m = a["m"].get<std::vector<double>>();
        const double expected = want.contains(m) ? want.at(m) : 0.0;
        EXPECT_NEAR(sign * a["re"].get<double>(), expected, 1e-3);
        EXPECT_NEAR(a["im"].get<double>(), 0.0, 1e-3);
    }

    ASSERT_EQ(call({"measure", "--in", path("q.json"), "--theta", "0,0,0,0", "--phi", "0,0,0,0", "--shots", "200",
                    "--seed", "5", "--out", path("m1.json")}),
              kExitOk)
        << err_.str();
    ASSERT_EQ(call({"measure", "--in", path("q.json"), "--theta", "0,0,0,0", "--phi", "0,0,0,0", "--shots", "200",
                    "--seed", "5", "--out", path("m2.json")}),
              kExitOk);
    EXPECT_EQ(slurp(path("m1.json")), slurp(path("m2.json")));
    ASSERT_EQ(call({"measure", "--in", path("s.json"), "--theta", "1,1,1,1", "--phi", "0,0,0,0"}), kExitOk)
        << err_.str();
}

TEST_F(CliTest, Determinism) {
    ASSERT_EQ(call({"simulate", "--graph", "builtin:chain3x2", "--out", path("a.json")}), kExitOk);
    ASSERT_EQ(call({"simulate", "--graph", "builtin:chain3x2", "--out", path("b.json")}), kExitOk);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    ASSERT_EQ(call({"nullifiers", "--graph", "builtin:two_epr"}), kExitOk);
    const std::string first = out_.str();
    ASSERT_EQ(call({"nullifiers", "--graph", "builtin:two_epr"}), kExitOk);
    EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, GraphFileInput) {
    std::ofstream(path("g.json")) << R"({"modes":4,"edges":[[1,2,1],[3,4,1]],"pairing":[[1,3],[2,4]]})";
    ASSERT_EQ(call({"nullifiers", "--graph", path("g.json")}), kExitOk) << err_.str();
    EXPECT_EQ(nlohmann::json::parse(out_.str())["exact"].size(), 4u);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(call({}), kExitUsage);
    EXPECT_EQ(call({"bogus"}), kExitUsage);
    EXPECT_EQ(call({"simulate"}), kExitUsage);
    EXPECT_NE(err_.str().find("--graph"), std::string::npos);
    EXPECT_EQ(call({"simulate", "--graph", "builtin:two_epr", "--r", "abc"}), kExitUsage);
    EXPECT_EQ(call({"--help"}), kExitOk);
}

TEST_F(CliTest, ValidationErrors) {
    EXPECT_EQ(call({"simulate", "--graph", "builtin:two_epr", "--cutoff", "5"}), kExitValidation);
    EXPECT_NE(err_.str().find("--cutoff"), std::string::npos);
    EXPECT_EQ(call({"simulate", "--graph", "builtin:two_epr", "--r", "-1"}), kExitValidation);
    EXPECT_NE(err_.str().find("--r"), std::string::npos);
    EXPECT_EQ(call({"simulate", "--graph", "builtin:missing"}), kExitValidation);
    EXPECT_NE(err_.str().find("--graph"), std::string::npos);
    EXPECT_EQ(call({"simulate", "--graph", path("absent.json")}), kExitValidation);
    std::ofstream(path("bad.json")) << "{not json";
    EXPECT_EQ(call({"simulate", "--graph", path("bad.json")}), kExitValidation);
    EXPECT_EQ(call({"entangle", "--in", path("bad.json")}), kExitValidation);
    EXPECT_NE(err_.str().find("--in"), std::string::npos);
    ASSERT_EQ(call({"simulate", "--graph", "builtin:two_epr", "--out", path("s.json")}), kExitOk);
    EXPECT_EQ(call({"postselect", "--in", path("s.json"), "--j", "0.3,0.5"}), kExitValidation);
    EXPECT_NE(err_.str().find("--j"), std::string::npos);
    EXPECT_EQ(call({"measure", "--in", path("s.json"), "--theta", "0", "--phi", "0"}), kExitValidation);
    EXPECT_NE(err_.str().find("--theta"), std::string::npos);
}

}  // namespace
}  // namespace schwinger::cli
