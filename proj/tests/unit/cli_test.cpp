// Copyright 2026 The mjdist Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace mjdist::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mjdist_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name)) << content;
    return path(name);
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, DistExamples) {
  Result r = invoke({"dist", "--n", "5", "--k", "2", "--set", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "Dist(J(5,2)_{2}) = 3, case 3\n");
  r = invoke({"dist", "--n", "8", "--k", "4", "--set", "4"});
  EXPECT_NE(r.out.find("= 9, case 8"), std::string::npos);
  r = invoke({"dist", "--n", "7", "--k", "3", "--set", "1,3"});
  EXPECT_NE(r.out.find("= 2, case 5"), std::string::npos);
  r = invoke({"dist", "--n", "6", "--k", "1", "--set", "1"});
  EXPECT_NE(r.out.find("= 6, case complete"), std::string::npos);
}

TEST_F(CliTest, DistErrors) {
  EXPECT_EQ(invoke({"dist", "--n", "5", "--k", "2", "--set", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"dist", "--n", "5", "--k", "2", "--set", "x"}).code, kUsageError);
  EXPECT_EQ(invoke({"dist", "--n", "5"}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  const Result big = invoke({"dist", "--n", "30", "--k", "15", "--set", "1"});
  EXPECT_EQ(big.code, kBudgetExceeded);
  EXPECT_FALSE(big.err.empty());
}

TEST_F(CliTest, DistThenVerify) {
  const std::string cert = path("cert.json");
  ASSERT_EQ(invoke({"dist", "--n", "8", "--k", "4", "--set", "1,3", "--certificate", cert}).code,
            kOk);
  const Result ok = invoke({"verify", "--certificate", cert});
  EXPECT_EQ(ok.code, kOk);
  EXPECT_EQ(ok.out, "verified: Dist(J(8,4)_{1,3}) = 3\n");

  const std::string text = slurp(cert);
  const std::string truncated = write("truncated.json", text.substr(0, text.size() / 3));
  const Result bad = invoke({"verify", "--certificate", truncated});
  EXPECT_EQ(bad.code, kUsageError);
  EXPECT_NE(bad.err.find("malformed certificate"), std::string::npos);
  EXPECT_EQ(invoke({"verify", "--certificate", path("missing.json")}).code, kUsageError);
}

TEST_F(CliTest, HandEditedColorFailsVerification) {
  const std::string cert = path("cert.json");
  ASSERT_EQ(invoke({"dist", "--n", "5", "--k", "2", "--set", "1", "--certificate", cert}).code,
            kOk);
  // Collapse every color to 1.
  std::string text = slurp(cert);
  for (std::size_t pos = 0; (pos = text.find("\"color\": ", pos)) != std::string::npos;) {
    pos += 9;
    text[pos] = '1';
  }
  const Result r = invoke({"verify", "--certificate", write("edited.json", text)});
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_EQ(r.out, "verification failed: color-preserving automorphism found\n");
}

TEST_F(CliTest, DetsetBuiltin) {
  Result r = invoke({"detset", "--n", "7", "--k", "3", "--set", "1,3", "--family", "builtin"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "determining: yes, asymmetric induced: no\n");
  r = invoke({"detset", "--n", "12", "--k", "4", "--set", "1,3", "--family", "builtin"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("determining: yes", 0), 0u);
  EXPECT_EQ(invoke({"detset", "--n", "8", "--k", "3", "--set", "1", "--family", "builtin"}).code,
            kUsageError);
}

TEST_F(CliTest, DetsetFromFiles) {
  const std::string vertices = write("s.txt", "1 2 3\n2,3,4\n{3,4,5}\n# comment\n4 5 6\n5 6 7\n");
  Result r = invoke({"detset", "--n", "7", "--k", "3", "--set", "1,3", "--vertices", vertices});
  EXPECT_EQ(r.out, "determining: yes, asymmetric induced: no\n");
  const std::string bad = write("bad.txt", "1 2\n");
  EXPECT_EQ(invoke({"detset", "--n", "7", "--k", "3", "--set", "1,3", "--vertices", bad}).code,
            kUsageError);

  // A single vertex of C5 does not determine the reflection through it.
  const std::string c5 = write("c5.txt", "1 2\n2 3\n3 4\n4 5\n5 1\n");
  r = invoke({"detset", "--graph", c5, "--vertices", write("one.txt", "1\n")});
  EXPECT_EQ(r.out.rfind("determining: no", 0), 0u);
  r = invoke({"detset", "--graph", c5, "--vertices", write("two.txt", "1\n2\n")});
  EXPECT_EQ(r.out.rfind("determining: yes", 0), 0u);
}

TEST_F(CliTest, AutOrder) {
  Result r = invoke({"aut", "--n", "4", "--k", "2", "--set", "2", "--order"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "48\n");
  r = invoke({"aut", "--n", "7", "--k", "3", "--set", "1,3", "--order"});
  EXPECT_EQ(r.out, "40320\n");
  r = invoke({"aut", "--n", "6", "--k", "2", "--set", "1"});
  EXPECT_NE(r.out.find("order: 720"), std::string::npos);
  EXPECT_EQ(invoke({"aut", "--n", "12", "--k", "4", "--set", "1,3", "--budget", "3"}).code,
            kBudgetExceeded);
}

TEST_F(CliTest, ExportFormats) {
  Result r = invoke({"export", "--n", "5", "--k", "2", "--set", "2", "--format", "dimacs"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("p edge 10 15\n", 0), 0u);
  const std::string file = path("petersen.txt");
  EXPECT_EQ(invoke({"export", "--n", "5", "--k", "2", "--set", "2", "--output", file}).code, kOk);
  std::istringstream lines(slurp(file));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 15);
  // The exported graph is readable again.
  r = invoke({"oracle", "--graph", file});
  EXPECT_EQ(r.out, "Dist = 3\n");
  EXPECT_EQ(invoke({"export", "--n", "5", "--k", "2", "--set", "2", "--format", "gml"}).code,
            kUsageError);
}

TEST_F(CliTest, FixedCountAndBound) {
  Result r = invoke({"fixed-count", "--m", "4", "--perm", "(1 2)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "15\n");
  r = invoke({"bound", "--m", "4"});
  EXPECT_EQ(r.out, "40320/59049 < 1\n");
  EXPECT_EQ(invoke({"fixed-count", "--m", "4", "--perm", "(1 9)"}).code, kUsageError);
  EXPECT_EQ(invoke({"bound", "--m", "3"}).code, kUsageError);
}

TEST_F(CliTest, Oracle) {
  const Result r = invoke({"oracle", "--n", "4", "--k", "2", "--set", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "Dist(J(4,2)_{1}) = 3\n");
}

TEST_F(CliTest, HelpExitsCleanly) {
  EXPECT_EQ(invoke({"--help"}).code, kOk);
  EXPECT_EQ(invoke({}).code, kUsageError);
}

}  // namespace
}  // namespace mjdist::cli
