// Copyright 2026 The tsvf Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "tsvf/cli.hpp"
#include "tsvf/format.hpp"
#include "tsvf/json_io.hpp"

namespace tsvf::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

TEST(CliList, NamesInStableOrder) {
  const Outcome a = invoke({"list"});
  EXPECT_EQ(a.code, kExitOk);
  std::size_t last = 0;
  for (const Scenario& s : builtin_scenarios()) {
    const std::size_t at = a.out.find(s.name);
    ASSERT_NE(at, std::string::npos) << s.name;
    EXPECT_GE(at, last);
    last = at;
  }
  EXPECT_EQ(invoke({"list"}).out, a.out);
}

TEST(CliRun, JsonReportForBuiltin) {
  const Outcome o = invoke({"run", "pigeonhole3", "--format", "json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const io::Json doc = io::Json::parse(o.out);
  EXPECT_EQ(doc["scenario"], "pigeonhole3");
  EXPECT_EQ(doc["records"][0]["amplitudes"][0]["vanishing"], true);
  EXPECT_EQ(io::report_from_json(doc), run_scenario(find_builtin("pigeonhole3")));
}

TEST(CliRun, TableRows) {
  const Outcome o = invoke({"run", "--scenario", "pigeonhole3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("0.125 + 0.125i (= (1+i)/8)"), std::string::npos);
}

TEST(CliRun, TableAndJsonCarrySameNumbers) {
  const Outcome table = invoke({"run", "transition"});
  const Outcome json = invoke({"run", "transition", "--format", "json"});
  ASSERT_EQ(table.code, kExitOk);
  ASSERT_EQ(json.code, kExitOk);
  EXPECT_NE(table.out.find("-0.375 - 0.375i (= (-3-3i)/8)"), std::string::npos);
  const io::Json doc = io::Json::parse(json.out);
  for (const auto& record : doc["records"]) {
    const auto& v = record["amplitudes"][0]["value"];
    const std::string text = format::complex_text({v[0].get<double>(), v[1].get<double>()});
    EXPECT_NE(table.out.find(text), std::string::npos) << text;
  }
}

TEST(CliRun, InputErrorsExitOne) {
  EXPECT_EQ(invoke({"run", "/nonexistent/file.json"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"run", "--scenario", "nope"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"run", "pigeonhole3", "--tolerance", "-1"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"run", "pigeonhole3", "--format", "xml"}).code, kExitInvalidInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInvalidInput);
  const auto bad = write_temp("tsvf_cli_bad.json",
                              R"({"name":"x","particles":2,"pre":["+","+"],"post":["+"],"queries":[]})");
  const Outcome o = invoke({"run", "--file", bad.string()});
  EXPECT_EQ(o.code, kExitInvalidInput);
  EXPECT_NE(o.err.find("/post"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(CliRun, QueryErrorsExitTwo) {
  const auto path = write_temp("tsvf_cli_orth.json", R"({
    "name": "orth", "particles": 1, "pre": ["L"], "post": ["R"],
    "queries": [{"type": "weak_value", "projector": {"kind": "box", "particle": 1, "box": "L"}}]})");
  const Outcome o = invoke({"run", path.string(), "--format", "json"});
  EXPECT_EQ(o.code, kExitQueryErrors);
  const io::Json doc = io::Json::parse(o.out);
  EXPECT_NE(doc["records"][0]["error"].get<std::string>().find("orthogonal pre/postselection"),
            std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliCheck, SameDiffSetIsResolution) {
  const auto path = write_temp("tsvf_cli_sd.txt", "sd(1,2;3)\nsd(2,3;1)\nsd(3,1;2)\nall_same\n");
  const Outcome o = invoke({"check", path.string(), "--format", "json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const io::Json doc = io::Json::parse(o.out);
  EXPECT_EQ(doc["resolution_of_identity"], true);
  for (const auto& op : doc["operators"]) EXPECT_EQ(op["is_projector"], true);
  for (const auto& p : doc["pairwise_orthogonal"]) EXPECT_EQ(p["orthogonal"], true);
  std::filesystem::remove(path);
}

TEST(CliCheck, OverlappingSumIsNotProjector) {
  const auto path = write_temp("tsvf_cli_sum.txt", "pair_same(1,2) + pair_same(2,3)\n");
  const Outcome o = invoke({"check", path.string(), "--format", "json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const io::Json doc = io::Json::parse(o.out);
  EXPECT_EQ(doc["operators"][0]["is_projector"], false);
  EXPECT_EQ(doc["operators"][0]["hermitian"], true);
  EXPECT_EQ(doc["resolution_of_identity"], false);
  EXPECT_EQ(invoke({"check", path.string()}).code, kExitOk);
  std::filesystem::remove(path);
}

TEST(CliCheck, ParseErrorExitsOne) {
  const auto path = write_temp("tsvf_cli_parse.txt", "all_same\npair_same(1,9)\n");
  const Outcome o = invoke({"check", path.string()});
  EXPECT_EQ(o.code, kExitInvalidInput);
  EXPECT_NE(o.err.find("line 2"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"check", "/nonexistent.txt"}).code, kExitInvalidInput);
}

TEST(CliHelp, ExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace tsvf::cli
