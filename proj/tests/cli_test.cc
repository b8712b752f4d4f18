//
// Copyright 2026 The mwpaug Authors
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
//

#include "mwpaug/cli/cli.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mwpaug/corpus/corpus_io.h"
#include "test_util.h"

namespace mwpaug::cli {
namespace {

using ::mwpaug::testing::SourcePath;
using ::mwpaug::testing::TempDir;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mwpaug");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      RunMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Sample() { return SourcePath("fixtures/corpus/sample.jsonl"); }

std::map<std::string, std::string> ReadTree(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[std::filesystem::relative(entry.path(), dir).string()] =
        *corpus::ReadFile(entry.path());
  }
  return files;
}

TEST(ValidateCommandTest, BundledSampleIsConsistent) {
  const Outcome o = Invoke({"validate", "--input", Sample()});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("consistent: 12/12"), std::string::npos) << o.out;
}

TEST(ValidateCommandTest, RejectsAreDataErrors) {
  const Outcome o =
      Invoke({"validate", "--input", SourcePath("fixtures/corpus/svamp_sample.json"),
           "--format", "svamp_json"});
  EXPECT_EQ(o.code, kExitData);
  EXPECT_NE(o.out.find("consistent: 5/7"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("reject answer-mismatch: 1"), std::string::npos);
  EXPECT_NE(o.err.find("wrong-answer"), std::string::npos);
}

TEST(ValidateCommandTest, MissingFileIsDataError) {
  EXPECT_EQ(Invoke({"validate", "--input", "/nonexistent/x.jsonl"}).code,
            kExitData);
}

TEST(AugmentCommandTest, IclWithoutCompletionSourceIsConfigError) {
  TempDir dir;
  const Outcome o = Invoke({"augment", "--input", Sample(), "--methods", "icl",
                         "--out", dir.path().string()});
  EXPECT_EQ(o.code, kExitConfig);
  EXPECT_NE(o.err.find("config"), std::string::npos);
  EXPECT_TRUE(std::filesystem::is_empty(dir.path()));
}

TEST(AugmentCommandTest, BadFlagsAreConfigErrors) {
  TempDir dir;
  const std::string out = dir.path().string();
  EXPECT_EQ(Invoke({"augment", "--input", Sample(), "--methods", "paraphrase",
                 "--out", out})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"augment", "--input", Sample(), "--methods", "reverse",
                 "--combined", "v1", "--out", out})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"augment", "--input", Sample(), "--methods", "qr,reverse",
                 "--combined", "v2", "--out", out})
                .code,
            kExitConfig);
  EXPECT_EQ(Invoke({"augment", "--methods", "reverse"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"augment", "--input", Sample(), "--bogus"}).code, kExitConfig);
  EXPECT_EQ(Invoke({}).code, kExitConfig);
}

TEST(AugmentCommandTest, UnreachableEndpointIsTransportError) {
  TempDir dir;
  const Outcome o =
      Invoke({"augment", "--input", Sample(), "--methods", "icl", "--llm-url",
           "http://127.0.0.1:1/v1", "--llm-model", "m", "--llm-retries", "0",
           "--out", dir.path().string()});
  EXPECT_EQ(o.code, kExitTransport) << o.err;
}

TEST(AugmentCommandTest, SameSeedTwiceGivesIdenticalBytes) {
  TempDir dir;
  const std::vector<std::string> common = {
      "augment",   "--input",   Sample(), "--methods",
      "synonym,qr,reverse",     "--combined", "v1,v2",
      "--lexicon", SourcePath("fixtures/lexicon/basic.tsv"), "--seed", "7"};
  auto first_args = common;
  first_args.insert(first_args.end(), {"--out", (dir.path() / "a").string()});
  auto second_args = common;
  second_args.insert(second_args.end(),
                     {"--out", (dir.path() / "b").string(), "--workers", "4"});
  const Outcome first = Invoke(first_args);
  const Outcome second = Invoke(second_args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  ASSERT_EQ(second.code, kExitOk) << second.err;
  EXPECT_NE(first.err.find("seed: 7"), std::string::npos);
  const auto a = ReadTree(dir.path() / "a" / "run-seed7");
  EXPECT_EQ(a, ReadTree(dir.path() / "b" / "run-seed7"));
  EXPECT_TRUE(a.contains("run.json"));
  EXPECT_TRUE(a.contains("combined/v2.jsonl"));
}

TEST(AugmentCommandTest, DefaultSeedIsPrinted) {
  TempDir dir;
  const Outcome o = Invoke({"augment", "--input", Sample(), "--methods",
                         "reverse", "--out", dir.path().string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.err.find("seed: 20240101"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "run-seed20240101" /
                                      "methods" / "reverse.jsonl"));
}

TEST(StatsCommandTest, RecountAgreesAndDetectsTampering) {
  TempDir dir;
  ASSERT_EQ(Invoke({"augment", "--input", Sample(), "--methods", "qr,reverse",
                 "--combined", "v1", "--out", dir.path().string()})
                .code,
            kExitOk);
  const auto run = dir.path() / "run-seed20240101";
  const Outcome ok = Invoke({"stats", "--run", run.string()});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(ok.out, *corpus::ReadFile(run / "stats.tsv"));

  std::string tsv = *corpus::ReadFile(run / "stats.tsv");
  tsv.back() = '7';
  ASSERT_TRUE(corpus::WriteFile(run / "stats.tsv", tsv + "\n").ok());
  EXPECT_EQ(Invoke({"stats", "--run", run.string()}).code, kExitData);
}

TEST(HelpTest, ExitsZero) {
  const Outcome o = Invoke({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("augment"), std::string::npos);
}

}  // namespace
}  // namespace mwpaug::cli
