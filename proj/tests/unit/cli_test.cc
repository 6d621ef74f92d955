// Copyright 2026 The Scholargraph Authors.
//
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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"
#include "scholargraph/graph_io.h"
#include "scholargraph/nlq.h"
#include "scholargraph/render.h"
#include "testing/fixtures.h"

namespace scholargraph {
namespace {

namespace fs = std::filesystem;
using ::scholargraph::testing::Mini;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scholargraph_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    graph_ = (dir_ / "mini.kg").string();
    Result built = RunCli({"build", "--corpus", testing::MiniCorpusPath().string(), "--venues",
                        testing::MiniVenuesPath().string(), "--fields",
                        testing::MiniFieldsPath().string(), "--out", graph_});
    ASSERT_EQ(built.code, 0) << built.err;
    build_output_ = built.out;
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::string graph_;
  std::string build_output_;
};

TEST_F(CliTest, BuildPrintsCounts) {
  EXPECT_NE(build_output_.find("nodes: 13\n"), std::string::npos);
  EXPECT_NE(build_output_.find("edges: 24\n"), std::string::npos);
}

TEST_F(CliTest, BuildIsDeterministic) {
  std::string second = (dir_ / "again.kg").string();
  ASSERT_EQ(RunCli({"build", "--corpus", testing::MiniCorpusPath().string(), "--venues",
                 testing::MiniVenuesPath().string(), "--fields",
                 testing::MiniFieldsPath().string(), "--out", second})
                .code,
            0);
  auto slurp = [](const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(graph_), slurp(second));
  EXPECT_FALSE(slurp(graph_).empty());
}

TEST_F(CliTest, Query) {
  Result r = RunCli({"query", graph_, "How many papers are published by Ann Smith"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3\n");
  Result yes = RunCli({"query", graph_, "Is ACL accepting papers from parsing"});
  EXPECT_EQ(yes.out, "yes\n");
}

TEST_F(CliTest, StructuredQueryMatchesLibrary) {
  const std::string q = "List the papers published by Bo Li";
  Result r = RunCli({"--format", "structured", "query", graph_, q});
  ASSERT_EQ(r.code, 0) << r.err;
  Answer direct = AnswerQuery(q, Mini(), TemplateCatalog::Default(), SentimentLexicon::Default());
  EXPECT_EQ(nlohmann::json::parse(r.out), AnswerJson(direct, Mini()));
  // The flag may also follow the subcommand.
  Result after = RunCli({"query", graph_, q, "--format", "structured"});
  EXPECT_EQ(after.out, r.out);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(RunCli({"query", graph_, "gibberish"}).code, cli::kExitUnsupportedQuery);
  EXPECT_EQ(RunCli({"query", graph_, "List the papers published by zzz qqq"}).code,
            cli::kExitNotFound);
  EXPECT_EQ(RunCli({"profile", graph_, "author", "nobody"}).code, cli::kExitNotFound);
  EXPECT_EQ(RunCli({"query", (dir_ / "missing.kg").string(), "x"}).code, cli::kExitIo);
  EXPECT_EQ(RunCli({"build", "--corpus", (dir_ / "none.jsonl").string(), "--out", graph_}).code,
            cli::kExitIo);
  EXPECT_EQ(RunCli({}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"query", graph_}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"--format", "xml", "query", graph_, "x"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"profile", graph_, "field", "parsing"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, Profile) {
  Result author = RunCli({"profile", graph_, "author", "Chris"});
  EXPECT_EQ(author.code, 0) << author.err;
  EXPECT_EQ(author.out.rfind("Chris Ray (a3)\n", 0), 0u);
  Result venue = RunCli({"--format", "structured", "profile", graph_, "venue", "ACL"});
  ASSERT_EQ(venue.code, 0);
  EXPECT_EQ(nlohmann::json::parse(venue.out)["recently_held_year"], 2013);
  Result paper = RunCli({"profile", graph_, "paper", "P1"});
  EXPECT_NE(paper.out.find("citations: 3\n"), std::string::npos);
}

TEST_F(CliTest, DumpRoundTrip) {
  std::string dump = (dir_ / "mini.dump").string();
  ASSERT_EQ(RunCli({"dump", graph_, dump}).code, 0);
  std::ifstream in(dump);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, DumpToString(Mini()));
  // A dump is itself a loadable graph.
  std::string again = (dir_ / "again.dump").string();
  ASSERT_EQ(RunCli({"dump", dump, again}).code, 0);
  std::ifstream in2(again);
  EXPECT_EQ(std::string((std::istreambuf_iterator<char>(in2)), {}), text);
  EXPECT_EQ(RunCli({"dump", graph_, (dir_ / "no/such/dir/x.dump").string()}).code, cli::kExitIo);
}

TEST_F(CliTest, ServeRejectsBadAddress) {
  EXPECT_EQ(RunCli({"serve", graph_, "--address", "nowhere:port"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace scholargraph
