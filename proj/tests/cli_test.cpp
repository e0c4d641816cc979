// Copyright 2026 The hardy-check Authors
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

#include "hardy/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using hardy::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(cli, verify_at_pi_over_6) {
    auto r = invoke({"verify", "--theta", "0.5235987755982988", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    for (auto id : {"Eq1", "Eq2", "Eq3", "Eq4"}) {
        EXPECT_EQ(j["predictions"]["verdicts"][id], true);
    }
    // Same bytes as the module report at the default theta.
    EXPECT_EQ(invoke({"verify"}).out, r.out);
}

TEST(cli, verify_fails_at_maximal_entanglement) {
    auto r = invoke({"verify", "--theta", "0.78539816339744828"});
    EXPECT_EQ(r.code, 1);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["predictions"]["verdicts"]["Eq4"], false);
}

TEST(cli, unknown_command) {
    auto r = invoke({"frobnicate"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(r.out, "");
}

TEST(cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"verify", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--theta", "0"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--theta", "1.5707963267948966"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--theta", "0,5"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--theta", "abc"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--tol", "-1"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"lhv", "--drop", "Eq9"}).code, 2);
    EXPECT_EQ(invoke({"optimize", "--lo", "0.5", "--hi", "0.4"}).code, 2);
}

TEST(cli, csv_only_for_tables) {
    auto r = invoke({"verify", "--format", "csv"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("csv"), std::string::npos);
    EXPECT_EQ(invoke({"lhv", "--format", "csv"}).code, 2);

    auto t = invoke({"table", "--format", "csv"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(std::count(t.out.begin(), t.out.end(), '\n'), 17);
}

TEST(cli, lhv_reports_infeasibility) {
    auto r = invoke({"lhv"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["feasible"], false);
    EXPECT_EQ(j["deduction_trace"].size(), 3u);

    auto dropped = invoke({"lhv", "--drop", "Eq1"});
    EXPECT_EQ(dropped.code, 1);
    EXPECT_EQ(nlohmann::json::parse(dropped.out)["feasible"], true);
}

TEST(cli, counterfactual) {
    auto r = invoke({"counterfactual", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("Locality violation (SR, a statement about R, depends on the choice in L): yes"),
              std::string::npos);
    EXPECT_EQ(invoke({"counterfactual", "--drop", "Eq2"}).code, 1);
}

TEST(cli, optimize) {
    auto r = invoke({"optimize"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["p4_max"].get<double>(), 0.09016994374947451, 1e-12);
    EXPECT_LT(std::abs(j["finite_difference"]["estimate"].get<double>()), 1e-4);
}

TEST(cli, out_file) {
    std::string path = ::testing::TempDir() + "hardy_cli_table.json";
    auto r = invoke({"table", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "");
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), invoke({"table"}).out);
    std::remove(path.c_str());
}

TEST(cli, repeated_runs_are_identical) {
    for (auto cmd : {"verify", "counterfactual", "lhv", "table", "optimize"}) {
        for (auto fmt : {"json", "text"}) {
            EXPECT_EQ(invoke({cmd, "--format", fmt}).out, invoke({cmd, "--format", fmt}).out) << cmd << fmt;
        }
    }
}

TEST(cli, exit_code_independent_of_format) {
    for (auto theta : {"0.3", "0.78539816339744828", "1.2"}) {
        int json = invoke({"verify", "--theta", theta, "--format", "json"}).code;
        int text = invoke({"verify", "--theta", theta, "--format", "text"}).code;
        EXPECT_EQ(json, text) << theta;
    }
}
