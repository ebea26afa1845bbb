// Copyright 2026 The Querylab Authors
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

#include <sstream>

#include "json.hpp"
#include "querylab/report.hpp"

namespace querylab {
namespace {

Report sample_report() {
    Report r("demo");
    r.config("n", int64_t{4});
    r.config("seed", int64_t{123456789});
    r.summary("ratio", Rational(2, 3));
    r.summary("ok", true);
    r.columns({"g", "N", "P", "x"});
    r.row({int64_t{1}, int64_t{4}, Rational(1, 4), 0.1});
    r.row({int64_t{2}, int64_t{6}, Rational(7, 30), 1.0 / 3.0});
    return r;
}

std::vector<std::string> csv_lines(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

TEST(Report, EmptyResultHasHeaderOnly) {
    Report r("empty");
    r.columns({"g", "N"});
    auto lines = csv_lines(r.to_csv());
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines.back(), "g,N");
    auto j = nlohmann::json::parse(r.to_json());
    EXPECT_TRUE(j["rows"].empty());
    EXPECT_EQ(j["columns"].size(), 2u);
}

TEST(Report, JsonAndCsvCarryTheSameNumbers) {
    Report r = sample_report();
    auto j = nlohmann::json::parse(r.to_json());
    auto lines = csv_lines(r.to_csv());
    std::vector<std::string> body;
    for (const auto &l : lines) {
        if (l.rfind("#", 0) != 0) body.push_back(l);
    }
    ASSERT_EQ(body.size(), 3u);
    EXPECT_EQ(body[0], "g,N,P,x");
    for (size_t k = 0; k < 2; ++k) {
        std::vector<std::string> cells;
        std::stringstream in(body[k + 1]);
        std::string cell;
        while (std::getline(in, cell, ',')) cells.push_back(cell);
        ASSERT_EQ(cells.size(), j["rows"][k].size());
        for (size_t c = 0; c < cells.size(); ++c) {
            const auto &v = j["rows"][k][c];
            if (v.is_string()) {
                EXPECT_EQ(v.get<std::string>(), cells[c]);
            } else {
                EXPECT_EQ(v.get<double>(), std::stod(cells[c]));  // bit-identical after parsing
            }
        }
    }
    EXPECT_NE(r.to_json().find("0.10000000000000001"), std::string::npos);
    EXPECT_EQ(j["rows"][1][2], "7/30");
}

TEST(Report, EchoesConfigAndVersions) {
    Report r = sample_report();
    auto j = nlohmann::ordered_json::parse(r.to_json());
    std::vector<std::string> keys;
    for (const auto &[k, v] : j.items()) keys.push_back(k);
    std::vector<std::string> want{"command", "version", "constants_version", "config",
                                  "summary", "attachments", "columns", "rows"};
    EXPECT_EQ(keys, want);
    EXPECT_EQ(j["config"]["seed"], 123456789);
    EXPECT_EQ(j["summary"]["ratio"], "2/3");
    auto csv = r.to_csv();
    EXPECT_NE(csv.find("# seed=123456789\n"), std::string::npos);
    EXPECT_NE(csv.find("# constants_version="), std::string::npos);
    EXPECT_NE(csv.find("# summary.ok=true\n"), std::string::npos);
}

TEST(Report, Deterministic) { EXPECT_EQ(sample_report().to_json(), sample_report().to_json()); }

TEST(Report, RowWidthChecked) {
    Report r("x");
    r.columns({"a"});
    EXPECT_THROW(r.row({int64_t{1}, int64_t{2}}), Error);
}

TEST(Report, UnwritablePath) {
    EXPECT_THROW(sample_report().write("/nonexistent-dir/out.json", "json"), Error);
    EXPECT_THROW(sample_report().write("/tmp/out.x", "xml"), Error);
}

TEST(Report, QuotesCsvCells) {
    Report r("q");
    r.columns({"monomial"});
    r.row({std::string("a,b")});
    EXPECT_EQ(csv_lines(r.to_csv()).back(), "\"a,b\"");
}

}  // namespace
}  // namespace querylab
