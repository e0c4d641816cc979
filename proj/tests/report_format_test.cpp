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

#include "hardy/report_format.hpp"

#include <clocale>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace hardy;

TEST(report_format, format_real_uses_17_significant_digits) {
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(format_real(1.0), "1");
    EXPECT_EQ(format_real(0.5235987755982988), "0.52359877559829882");
    EXPECT_EQ(format_real(1e-33), "1.0000000000000001e-33");
    for (double x : {0.07814065897005959, 1.0 / 3.0, 6.02e23, -2.5e-7}) {
        EXPECT_EQ(std::stod(format_real(x)), x);
    }
}

TEST(report_format, json_writer_layout) {
    JsonWriter w;
    w.begin_object().field("a", 1.5).key("b").begin_array().value(true).value("x").end_array();
    w.key("c").begin_object().end_object().key("d").null().end_object();
    EXPECT_EQ(w.str(), "{\n  \"a\": 1.5,\n  \"b\": [\n    true,\n    \"x\"\n  ],\n  \"c\": {},\n  \"d\": null\n}\n");
    JsonWriter q;
    q.value("say \"hi\"\\");
    EXPECT_EQ(q.str(), "\"say \\\"hi\\\"\\\\\"\n");
}

TEST(report_format, table_json_records_in_fixed_order) {
    double theta = std::numbers::pi / 6;
    auto table = joint_probability_table(build_hardy_configuration(theta));
    auto j = nlohmann::json::parse(table_to_json(table, theta));
    EXPECT_EQ(j["theta"].get<double>(), theta);
    ASSERT_EQ(j["records"].size(), 16u);
    std::size_t k = 0;
    for (const auto &s : kSettingPairs) {
        for (const auto &o : kOutcomePairs) {
            const auto &rec = j["records"][k++];
            EXPECT_EQ(rec["setting_pair"], label(s));
            EXPECT_EQ(rec["outcome_pair"], label(o));
            EXPECT_EQ(rec["probability"].get<double>(), table.at(s, o));
        }
    }
    EXPECT_EQ(j["records"][0]["setting_pair"], "L1R1");
    EXPECT_EQ(j["records"][15]["outcome_pair"], "--");
}

TEST(report_format, table_csv) {
    auto table = joint_probability_table(build_hardy_configuration(0.4));
    auto csv = table_to_csv(table);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), 17u);
    EXPECT_EQ(lines[0], "setting_pair,outcome_pair,probability");
    EXPECT_EQ(lines[1].rfind("L1R1,++,", 0), 0u);
    EXPECT_EQ(lines[3].rfind("L1R1,-+,", 0), 0u);
    EXPECT_EQ(lines[3], "L1R1,-+," + format_real(table.at(kEq4)));
    EXPECT_EQ(lines[16].rfind("L2R2,--,", 0), 0u);
}

TEST(report_format, rendering_is_deterministic) {
    auto table = joint_probability_table(build_hardy_configuration(0.9));
    EXPECT_EQ(table_to_json(table, 0.9), table_to_json(table, 0.9));
    auto cs = hardy_constraint_set();
    EXPECT_EQ(counterfactual_to_json(cs, locality_violation_report(cs)),
              counterfactual_to_json(cs, locality_violation_report(cs)));
    EXPECT_EQ(lhv_to_json(cs, hardy_lhv_feasibility()), lhv_to_json(cs, hardy_lhv_feasibility()));
}

TEST(report_format, locale_does_not_change_numbers) {
    auto table = joint_probability_table(build_hardy_configuration(0.3));
    auto before = table_to_csv(table);
    if (std::setlocale(LC_ALL, "de_DE.UTF-8") != nullptr) {
        EXPECT_EQ(table_to_csv(table), before);
        std::setlocale(LC_ALL, "C");
    }
    EXPECT_EQ(before.find("0,"), std::string::npos);
}

TEST(report_format, counterfactual_json_encodes_witness_tuple) {
    auto cs = hardy_constraint_set();
    auto r = locality_violation_report(cs);
    auto j = nlohmann::json::parse(counterfactual_to_json(cs, r));
    EXPECT_EQ(j["locality_violation"], true);
    EXPECT_EQ(j["property1"]["holds"], true);
    EXPECT_EQ(j["property1"]["admissible_ids"].size(), 24u);
    auto tuple = j["property2"]["witness"]["tuple"];
    ASSERT_EQ(tuple.size(), 6u);
    EXPECT_EQ(tuple[0], "-");
    EXPECT_EQ(tuple[2], "+");
    EXPECT_EQ(tuple[3], "+");
    EXPECT_EQ(j["property2"]["forced_step"]["constraint"], "Eq3");
    EXPECT_EQ(j["constraint_set"]["zeros"].size(), 3u);
    EXPECT_EQ(j["constraint_set"]["positives"][0]["id"], "Eq4");
}

TEST(report_format, counterfactual_text_names_witness) {
    auto cs = hardy_constraint_set();
    auto r = locality_violation_report(cs);
    auto text = counterfactual_to_text(cs, r);
    EXPECT_NE(text.find("witness #" + std::to_string(r.property2.witness->id()) + " " + r.property2.witness->to_string()),
              std::string::npos);
    EXPECT_NE(text.find("Property 1"), std::string::npos);
    EXPECT_NE(text.find("Property 2"), std::string::npos);
    EXPECT_NE(text.find("SR"), std::string::npos);
    EXPECT_NE(text.find("Eq3"), std::string::npos);
}

TEST(report_format, lhv_json_trace) {
    auto cs = hardy_constraint_set();
    auto j = nlohmann::json::parse(lhv_to_json(cs, hardy_lhv_feasibility()));
    EXPECT_EQ(j["feasible"], false);
    ASSERT_EQ(j["deduction_trace"].size(), 3u);
    EXPECT_EQ(j["deduction_trace"][0]["constraint"], "Eq2");
    EXPECT_EQ(j["deduction_trace"][0]["setting"], "L2");
    EXPECT_EQ(j["deduction_trace"][0]["value"], "-");
    EXPECT_EQ(j["deduction_trace"][2]["contradiction"], true);
}

TEST(report_format, verify_json_and_text) {
    double theta = std::numbers::pi / 6;
    auto table = joint_probability_table(build_hardy_configuration(theta));
    auto p = verify_hardy_predictions(table, kZeroTol);
    auto ns = no_signalling_check(table, kIdentityTol);
    auto j = nlohmann::json::parse(verify_to_json(theta, p, ns));
    for (auto id : {"Eq1", "Eq2", "Eq3", "Eq4"}) {
        EXPECT_EQ(j["predictions"]["verdicts"][id], true) << id;
    }
    EXPECT_EQ(j["predictions"]["p4_positive"].get<double>(), p.p4_positive);
    EXPECT_EQ(j["no_signalling"]["pass"], true);
    auto text = verify_to_text(theta, p, ns);
    EXPECT_NE(text.find("Eq1 P(L2-,R2+)"), std::string::npos);
    EXPECT_NE(text.find("Eq4 P(L1-,R1+)"), std::string::npos);
}
