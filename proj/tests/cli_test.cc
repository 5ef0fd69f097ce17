// Copyright 2026 The posetgame Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posetgame/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "posetgame/json_io.h"

namespace posetgame {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "posetgame");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  Result result;
  result.code = RunCli(args, in, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

std::string Data(const std::string& name) {
  return std::string(POSETGAME_TEST_DATA_DIR) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::filesystem::path path =
      std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, PosetSolveWorkedExample) {
  const Result r = Invoke({"poset-solve", Data("worked_example.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["total"], "4/5");
  EXPECT_EQ(json["iterations"], 5);
  EXPECT_EQ(json["sigma"].size(), 5u);
  EXPECT_EQ(json["sigma"]["1-2-3-4-5"], "3/10");
  EXPECT_EQ(json["sigma"]["4-5"], "1/5");
  EXPECT_EQ(json["distribution"]["\xE2\x88\x85"], "1/5");
  EXPECT_FALSE(json.contains("trace"));
}

TEST(CliTest, AffineInputSelectsAffineSolver) {
  const Result r =
      Invoke({"poset-solve", Data("worked_example_affine.json"), "--trace"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["total"], "4/5");
  ASSERT_EQ(json["trace"].size(), 5u);
  EXPECT_TRUE(json["trace"][0].contains("hop_lengths"));
}

TEST(CliTest, TraceOfGeneralSolver) {
  const Result r = Invoke({"poset-solve", "--trace", Data("worked_example.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json trace = ParseJsonText(r.out)["trace"];
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_EQ(trace[0]["selected"], "1-2-3-4-5");
  EXPECT_EQ(trace[0]["weight"], "3/10");
  EXPECT_EQ(trace[0]["delta"]["1-3-4"], "3/5");
}

TEST(CliTest, OracleCrossCheck) {
  const Result r = Invoke({"poset-solve", Data("worked_example.json"), "--oracle"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["oracle"]["optimum"], "4/5");
  EXPECT_EQ(json["oracle"]["agrees"], true);
}

TEST(CliTest, PosetVerifyReportsConservationQuadruple) {
  const Result r = Invoke({"poset-verify", Data("crossing.json")});
  EXPECT_EQ(r.code, kExitViolation);
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["conservation_ok"], false);
  const Json& v = json["conservation_violations"][0];
  EXPECT_EQ(v["first"], "1-4-5");
  EXPECT_EQ(v["second"], "2-4-6");
  EXPECT_EQ(v["first_second"], "1-4-6");
  EXPECT_EQ(v["second_first"], "2-4-5");
  EXPECT_EQ(v["lhs"], "6/5");
  EXPECT_EQ(v["rhs"], "8/5");
}

TEST(CliTest, PosetSolveRefusesViolatedConditions) {
  const Result r = Invoke({"poset-solve", Data("crossing.json")});
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("conservation_violations"), std::string::npos);
}

TEST(CliTest, GameSolveTwoPath) {
  const Result r = Invoke({"game-solve", Data("two_path.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["rho"]["(s,1)"], "1/10");
  EXPECT_EQ(json["rho"]["(1,t)"], "7/10");
  EXPECT_EQ(json["interdiction"]["(s,1)"], "1/10");
  EXPECT_EQ(json["interdiction"]["(1,t)"], "7/10");
  EXPECT_EQ(json["flow"]["s->1->t"], "1");
  EXPECT_EQ(json["u1"], "0");
  EXPECT_EQ(json["u2"], "0");
}

TEST(CliTest, GameCriticalQuantitiesAndPure) {
  Result r = Invoke({"game-critical", Data("two_path.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["critical_edges"], Json({"(1,t)", "(s,1)"}));
  EXPECT_EQ(json["critical_paths"].size(), 2u);

  r = Invoke({"game-quantities", Data("two_path.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json = ParseJsonText(r.out);
  EXPECT_EQ(json["effective_flow"], "1/2");
  EXPECT_EQ(json["interdicted_flow"], "3/2");

  r = Invoke({"pure-ne", Data("two_path.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ParseJsonText(r.out)["exists"], false);
}

TEST(CliTest, SolveOutputsReverify) {
  const Result poset = Invoke({"poset-solve", Data("worked_example.json")});
  const std::string solution = WriteTemp("solution.json", poset.out);
  const Result check =
      Invoke({"poset-verify", Data("worked_example.json"), solution});
  EXPECT_EQ(check.code, kExitOk) << check.out;
  EXPECT_EQ(ParseJsonText(check.out)["solution_ok"], true);

  Json broken = ParseJsonText(poset.out);
  broken["sigma"]["4-5"] = "3/10";
  const Result bad = Invoke({"poset-verify", Data("worked_example.json"),
                          WriteTemp("broken.json", broken.dump())});
  EXPECT_EQ(bad.code, kExitViolation);
  EXPECT_EQ(ParseJsonText(bad.out)["solution_ok"], false);

  const Result game = Invoke({"game-solve", Data("two_path.json")});
  const std::string profile = WriteTemp("equilibrium.json", game.out);
  const Result verify = Invoke({"game-verify", Data("two_path.json"), profile});
  EXPECT_EQ(verify.code, kExitOk) << verify.err;
  EXPECT_EQ(ParseJsonText(verify.out)["is_ne"], true);
}

TEST(CliTest, GameVerifyRejectsNonEquilibrium) {
  const std::string profile = WriteTemp(
      "overload.json",
      R"({"flow": {"s->1->t": 2}, "interdiction": {"": 1}})");
  const Result r = Invoke({"game-verify", Data("two_path.json"), profile});
  EXPECT_EQ(r.code, kExitViolation);
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["is_ne"], false);
  EXPECT_EQ(json["p2_gap"], "1");
  EXPECT_EQ(json["p2_best_response"], "(s,1)");
}

TEST(CliTest, Deterministic) {
  for (const char* verb : {"poset-solve", "game-solve"}) {
    const std::string file =
        Data(std::string(verb) == "poset-solve" ? "worked_example.json"
                                                : "two_path.json");
    const Result first = Invoke({verb, file, "--trace"});
    const Result second = Invoke({verb, file, "--trace"});
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(CliTest, ReadsStandardInput) {
  std::ifstream file(Data("two_path.json"));
  std::stringstream text;
  text << file.rdbuf();
  const Result r = Invoke({"game-solve", "-"}, text.str());
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, Invoke({"game-solve", Data("two_path.json")}).out);
}

TEST(CliTest, FormatAndEmptyKey) {
  const Result r = Invoke({"poset-solve", Data("worked_example.json"), "--format",
                        "pretty", "--empty-key", ""});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json json = ParseJsonText(r.out);
  EXPECT_EQ(json["total"], "0.8");
  EXPECT_EQ(json["distribution"][""], "0.2");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({"poset-solve", "-"}, "{not json").code, kExitMalformed);
  EXPECT_EQ(Invoke({"poset-solve", Data("missing.json")}).code, kExitMalformed);
  EXPECT_EQ(Invoke({"no-such-verb", Data("worked_example.json")}).code,
            kExitMalformed);
  EXPECT_EQ(Invoke({"poset-solve", Data("worked_example.json"), "--affine"}).code,
            kExitMalformed);
  EXPECT_EQ(
      Invoke({"poset-solve", Data("worked_example.json"), "--chain-cap", "2"}).code,
      kExitResourceLimit);
  EXPECT_EQ(Invoke({"game-solve", Data("two_path.json"), "--chain-cap", "1"}).code,
            kExitResourceLimit);
  EXPECT_EQ(Invoke({"game-solve", Data("worked_example.json")}).code, kExitMalformed);
  const std::string violated =
      R"({"poset": {"elements": [1, 2], "relations": [[1, 2]]},
          "rho": {"1": 0.1, "2": 0.1}, "pi": {"explicit": {"1-2": 0.5}}})";
  const Result r = Invoke({"poset-solve", "-"}, violated);
  EXPECT_EQ(r.code, kExitViolation);
  EXPECT_NE(r.err.find("necessary_violations"), std::string::npos);
}

TEST(CliTest, DecimalLiteralsAreExact) {
  const std::string problem =
      R"({"poset": {"elements": ["a"]}, "rho": {"a": 0.1},
          "pi": {"explicit": {"a": 1e-1}}})";
  const Result r = Invoke({"poset-solve", "-"}, problem);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ParseJsonText(r.out)["total"], "1/10");
}

}  // namespace
}  // namespace posetgame
