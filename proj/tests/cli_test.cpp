/*
 * Copyright 2026 The SGC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/rational.hpp>

#include "cli.hpp"
#include "json.hpp"
#include "sgc/example1.hpp"

namespace sgc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  return out;
}

using Q = boost::rational<long long>;

Q Frac(const std::vector<std::string>& f, std::size_t i) {
  return Q(std::stoll(f[i]), std::stoll(f[i + 1]));
}

TEST(Cli, KeysizeWorkedInstance) {
  auto r = Call({"keysize", "--n", "12", "--nr", "7", "--m", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("h         6\n"), std::string::npos);
  EXPECT_NE(r.out.find("eta       2\n"), std::string::npos);
  EXPECT_NE(r.out.find("cyclic    5/2 (2.5)\n"), std::string::npos);
  EXPECT_NE(r.out.find("converse  1\n"), std::string::npos);
  EXPECT_NE(r.out.find("scheme3"), std::string::npos);
}

TEST(Cli, KeysizeDivisibleIsTight) {
  auto r = Call({"keysize", "--n", "24", "--mbig", "8", "--m", "2", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["eta_achieved"], j["eta_converse"]);
  EXPECT_EQ(j["eta_achieved"]["num"], 2);
}

TEST(Cli, KeysizeNoStragglers) {
  // N_r = N with m = 1 forces M = 1: one dataset per server.
  auto r = Call({"keysize", "--n", "4", "--nr", "4", "--m", "1"});
  EXPECT_NE(r.out.find("eta       3\n"), std::string::npos);
  r = Call({"keysize", "--n", "4", "--mbig", "4", "--m", "1"});
  EXPECT_NE(r.out.find("eta       0\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(Call({"verify", "--n", "5", "--nr", "6", "--m", "1"}).code, kExitUsage);
  EXPECT_EQ(Call({"keysize", "--n", "5", "--m", "1"}).code, kExitUsage);
  EXPECT_EQ(Call({"keysize", "--n", "5", "--nr", "4", "--mbig", "2", "--m", "1"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"verify", "--n", "6", "--nr", "4", "--m", "2", "--q", "4"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyCleanPlanExitsZero) {
  auto r = Call({"verify", "--n", "6", "--nr", "4", "--m", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["subsets_checked"], 15);
  EXPECT_EQ(j["report"]["pass"], true);
}

TEST(Cli, VerifyWorkedInstanceNamesDecodeStage) {
  auto r = Call({"verify", "--n", "12", "--nr", "7", "--m", "2", "--q", "65537",
                 "--seed", "0"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["subsets_checked"], 792);
  const auto failed = j["report"]["subsets_failed_count"].get<int>();
  EXPECT_EQ(r.code, failed == 0 ? kExitOk : kExitVerify);
  if (failed > 0) EXPECT_NE(r.err.find("stage decode"), std::string::npos);
  EXPECT_EQ(j["report"]["security"]["rank_check"], true);
}

TEST(Cli, ConstructionFailureExitCode) {
  // Cyclic coding needs more than N nonzero points.
  auto r = Call({"verify", "--n", "8", "--mbig", "3", "--m", "2", "--q", "3"});
  EXPECT_EQ(r.code, kExitConstruct);
  EXPECT_NE(r.err.find("construction failed"), std::string::npos);
}

TEST(Cli, VerifyIsByteDeterministic) {
  auto a = Call({"verify", "--n", "9", "--nr", "6", "--m", "2", "--seed", "11"});
  auto b = Call({"verify", "--n", "9", "--nr", "6", "--m", "2", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, SeedEnvironmentOverride) {
  auto plain = Call({"verify", "--n", "7", "--nr", "5", "--m", "2", "--seed", "3"});
  ::setenv("SGC_SEED", "3", 1);
  auto env = Call({"verify", "--n", "7", "--nr", "5", "--m", "2", "--seed", "99"});
  ::setenv("SGC_SEED", "-1", 1);
  auto bad = Call({"verify", "--n", "7", "--nr", "5", "--m", "2"});
  ::unsetenv("SGC_SEED");
  EXPECT_EQ(plain.out, env.out);
  EXPECT_EQ(nlohmann::json::parse(env.out)["report"]["seed"], 3);
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Cli, SecureCheckIsExhaustive) {
  auto r = Call({"secure-check", "--n", "4", "--nr", "3", "--m", "1", "--q", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["security"]["mi"]["log_q"]["num"], 0);
  r = Call({"verify", "--n", "6", "--nr", "4", "--m", "2", "--q", "3",
            "--exhaustive-security"});
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["security"]["mi"]["log_q"]["num"], 0);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "sgc_cli_out.json";
  std::filesystem::remove(path);
  auto r = Call({"verify", "--n", "6", "--nr", "4", "--m", "2", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["command"], "verify");
}

TEST(Cli, SweepDominance) {
  auto r = Call({"sweep", "--n", "24", "--mbig", "10", "--vary", "m", "--from", "1",
                 "--to", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0],
            "n,nr,m,mbig,h,eta_achieved_num,eta_achieved_den,eta_cyclic_num,"
            "eta_cyclic_den,eta_converse_num,eta_converse_den,fallback,verified");
  int strict = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = Fields(lines[i]);
    ASSERT_EQ(f.size(), 13u);
    EXPECT_EQ(std::stoi(f[2]), static_cast<int>(i));
    const Q achieved = Frac(f, 5), cyclic = Frac(f, 7), converse = Frac(f, 9);
    EXPECT_LE(converse, achieved);
    EXPECT_LE(achieved, cyclic);
    if (achieved < cyclic) ++strict;
  }
  EXPECT_GT(strict, 0);
}

TEST(Cli, SweepTightAtDivisors) {
  auto r = Call({"sweep", "--n", "24", "--m", "1", "--vary", "M", "--from", "1",
                 "--to", "24", "--no-verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  int divisors = 0;
  for (const auto& line : Lines(r.out)) {
    auto f = Fields(line);
    if (f[0] == "n" || 24 % std::stoi(f[3]) != 0) continue;
    ++divisors;
    EXPECT_EQ(Frac(f, 5), Frac(f, 9)) << line;
    EXPECT_EQ(f[12], "skipped");
  }
  EXPECT_EQ(divisors, 8);
}

TEST(Cli, SweepEmptyRangeIsHeaderOnly) {
  auto r = Call({"sweep", "--mbig", "10", "--vary", "m", "--from", "3", "--to", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(Lines(r.out).size(), 1u);
}

TEST(Cli, SweepSkipsInvalidPoints) {
  auto r = Call({"sweep", "--n", "8", "--mbig", "3", "--vary", "m", "--from", "1",
                 "--to", "5", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 3u);
  EXPECT_EQ(j["notes"].size(), 2u);
  EXPECT_NE(r.err.find("skipped (N,M,m)=(8,3,4)"), std::string::npos);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["verified"], "true");
}

TEST(Cli, Example1Default) {
  auto r = Call({"example1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("rank=6 eta=2 assignment=match"), std::string::npos);
}

TEST(Cli, Example1ReseededRebuild) {
  auto r = Call({"example1", "--seed", "7", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rebuild"]["rank"], 6);
  EXPECT_EQ(j["rebuild"]["profile_matches_seed0"], true);
  EXPECT_EQ(j["rebuild"]["coefficients_differ_from_seed0"], true);
  for (const auto& id : j["identities"]) EXPECT_EQ(id["pass"], true) << id["name"];
}

TEST(Cli, Example1CorruptedFixture) {
  std::ifstream in(DefaultFixturePath());
  auto fx = nlohmann::json::parse(in);
  fx["S"][4][0] = "7";
  auto path = std::filesystem::temp_directory_path() / "sgc_cli_bad_fixture.json";
  std::ofstream(path) << fx.dump();
  auto r = Call({"example1", "--fixture", path.string()});
  EXPECT_EQ(r.code, kExitVerify);
  EXPECT_NE(r.err.find("S_rows_annihilate_missing_columns"), std::string::npos);
  EXPECT_EQ(Call({"example1", "--fixture", "/nonexistent.json"}).code, kExitUsage);
}

}  // namespace
}  // namespace sgc::cli
