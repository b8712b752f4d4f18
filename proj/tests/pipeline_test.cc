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

#include "mwpaug/pipeline/pipeline.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/llm/mock.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/solver.h"
#include "mwpaug/pipeline/config.h"
#include "mwpaug/pipeline/run.h"
#include "mwpaug/pipeline/stats.h"
#include "test_util.h"

namespace mwpaug::pipeline {
namespace {

using corpus::MwpRecord;
using corpus::Provenance;
using ::mwpaug::testing::FredRecord;
using ::mwpaug::testing::GeneratedNouns;
using ::mwpaug::testing::GenerateProblems;
using ::mwpaug::testing::TempDir;

MwpRecord Make(std::string id, std::string text, std::string equation,
               double answer, Provenance provenance = Provenance::kOriginal) {
  MwpRecord r;
  r.id = std::move(id);
  r.text = std::move(text);
  r.equation = std::move(equation);
  r.answer = answer;
  r.provenance = provenance;
  if (provenance != Provenance::kOriginal) r.parent_id = "p";
  return r;
}

MethodRun EmissionsOnly(std::vector<MwpRecord> emissions) {
  MethodRun run;
  run.emissions = std::move(emissions);
  return run;
}

augment::SynonymLexicon NounLexicon() {
  augment::SynonymLexicon lexicon;
  for (const std::string& noun : GeneratedNouns()) {
    lexicon.entries[noun] = {"spare " + noun, "extra " + noun};
  }
  lexicon.entries["bags"] = {"sacks"};
  return lexicon;
}

llm::MockLlm MockFor(const std::vector<testing::GeneratedProblem>& problems) {
  llm::MockLlm mock;
  for (const auto& p : problems) mock.AddTarget(p.record.text, p.rephrase);
  return mock;
}

std::set<DedupKey> Keys(const std::vector<MwpRecord>& records) {
  std::set<DedupKey> keys;
  for (const auto& r : records) keys.insert(MakeDedupKey(r));
  return keys;
}

bool Includes(const std::vector<MwpRecord>& big,
              const std::vector<MwpRecord>& small) {
  const auto keys = Keys(big);
  return std::all_of(small.begin(), small.end(), [&](const MwpRecord& r) {
    return keys.contains(MakeDedupKey(r));
  });
}

std::vector<MwpRecord> ReadSet(const std::filesystem::path& path) {
  auto loaded = corpus::LoadCorpus(path, corpus::CorpusFormat::kUnifiedJsonl);
  EXPECT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_TRUE(loaded->rejects.empty()) << path;
  return loaded->records;
}

std::map<std::string, std::string> ReadTree(const std::filesystem::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[std::filesystem::relative(entry.path(), dir).string()] =
        *corpus::ReadFile(entry.path());
  }
  return files;
}

// Writes the generated corpus and returns a config running everything.
AugmentConfig FullConfig(const TempDir& dir, size_t count,
                         const std::vector<testing::GeneratedProblem>& problems) {
  std::vector<MwpRecord> records;
  for (const auto& p : problems) records.push_back(p.record);
  EXPECT_TRUE(corpus::WriteCorpus(records, dir.path() / "gen.jsonl").ok());
  std::string lexicon;
  for (const auto& [word, synonyms] : NounLexicon().entries) {
    lexicon += word + "\t";
    for (size_t i = 0; i < synonyms.size(); ++i) {
      lexicon += (i > 0 ? "," : "") + synonyms[i];
    }
    lexicon += "\n";
  }
  EXPECT_TRUE(corpus::WriteFile(dir.path() / "lex.tsv", lexicon).ok());
  std::string mock;
  for (const auto& p : problems) {
    nlohmann::json j = {{"target", p.record.text}, {"completion", p.rephrase}};
    mock += j.dump() + "\n";
  }
  EXPECT_TRUE(corpus::WriteFile(dir.path() / "mock.jsonl", mock).ok());
  (void)count;

  AugmentConfig config;
  config.input = dir.path() / "gen.jsonl";
  config.output_dir = dir.path() / "out";
  config.methods = {Method::kSynonym, Method::kQuestionRepl, Method::kReverse,
                    Method::kIcl};
  config.combined = {Variant::kV1, Variant::kV2, Variant::kV3, Variant::kV4};
  config.lexicon = dir.path() / "lex.tsv";
  config.mock_llm = dir.path() / "mock.jsonl";
  return config;
}

TEST(RunMethodTest, EmptyCorpus) {
  AugmentConfig config;
  const auto lexicon = NounLexicon();
  llm::MockLlm mock;
  const auto prompt = *llm::BundledTemplate("mawps");
  augment::IdentityFixer fixer;
  const MethodContext ctx{&config, &lexicon, &mock, &prompt, &fixer};
  for (Method m : {Method::kSynonym, Method::kQuestionRepl, Method::kReverse,
                   Method::kIcl}) {
    auto run = RunMethod(m, {}, ctx);
    ASSERT_TRUE(run.ok()) << run.status();
    EXPECT_TRUE(run->records.empty());
    EXPECT_EQ(run->stats.inputs, 0u);
    EXPECT_EQ(run->stats.emitted, 0u);
    EXPECT_EQ(run->stats.TotalSkipped(), 0u);
  }
}

TEST(RunMethodTest, ReverseThreeRecordFixture) {
  const std::vector<MwpRecord> corpus = {
      FredRecord(),
      Make("turnips",
           "Melanie grew 139 turnips. Benny grew 113 turnips. How many "
           "turnips did they grow in all ?",
           "X=139+113", 252),
      Make("cakes",
           "A restaurant served 6 cakes during lunch and 9 during dinner "
           "today . How many cakes were served today ?",
           "X=6+9", 15),
  };
  AugmentConfig config;
  MethodContext ctx;
  ctx.config = &config;
  auto run = RunMethod(Method::kReverse, corpus, ctx);
  ASSERT_TRUE(run.ok()) << run.status();
  ASSERT_EQ(run->records.size(), 5u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(run->records[i].provenance, Provenance::kOriginal);
  }
  EXPECT_EQ(run->records[3].id, "fred:reverse");
  EXPECT_EQ(run->records[4].id, "turnips:reverse");
  EXPECT_EQ(run->records[4].text,
            "They grew 252 turnips in all. Benny grew 113 turnips. How many "
            "turnips did Melanie grow?");
  ASSERT_EQ(run->skips.size(), 1u);
  EXPECT_EQ(run->skips[0].id, "cakes");
  EXPECT_EQ(run->skips[0].reason, "no-convertible-statement");
  EXPECT_EQ(run->stats.emitted, 2u);
  EXPECT_EQ(run->stats.skipped.at("no-convertible-statement"), 1u);
}

TEST(RunMethodTest, SynonymFullCoverageDoublesCorpus) {
  const auto problems = GenerateProblems(120, 5);
  std::vector<MwpRecord> corpus;
  for (const auto& p : problems) corpus.push_back(p.record);
  AugmentConfig config;
  const auto lexicon = NounLexicon();
  MethodContext ctx;
  ctx.config = &config;
  ctx.lexicon = &lexicon;
  auto run = RunMethod(Method::kSynonym, corpus, ctx);
  ASSERT_TRUE(run.ok()) << run.status();
  EXPECT_EQ(run->records.size(), 2 * corpus.size());
  EXPECT_EQ(run->stats.TotalSkipped(), 0u);
}

TEST(RunMethodTest, MissingCollaboratorIsConfigError) {
  AugmentConfig config;
  MethodContext ctx;
  ctx.config = &config;
  for (Method m : {Method::kSynonym, Method::kQuestionRepl, Method::kIcl}) {
    auto run = RunMethod(m, {FredRecord()}, ctx);
    ASSERT_FALSE(run.ok());
    EXPECT_EQ(ClassifyError(run.status()), ErrorClass::kConfig);
  }
}

TEST(RunMethodTest, WorkerCountDoesNotChangeOutput) {
  const auto problems = GenerateProblems(64, 11);
  std::vector<MwpRecord> corpus;
  for (const auto& p : problems) corpus.push_back(p.record);
  auto mock = MockFor(problems);
  const auto lexicon = NounLexicon();
  const auto prompt = *llm::BundledTemplate("mawps");
  augment::IdentityFixer fixer;
  AugmentConfig one;
  AugmentConfig many;
  many.workers = 8;
  for (Method m : {Method::kSynonym, Method::kQuestionRepl, Method::kReverse,
                   Method::kIcl}) {
    auto a = RunMethod(m, corpus, {&one, &lexicon, &mock, &prompt, &fixer});
    auto b = RunMethod(m, corpus, {&many, &lexicon, &mock, &prompt, &fixer});
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(*corpus::SerializeCorpus(a->records),
              *corpus::SerializeCorpus(b->records));
    EXPECT_EQ(FormatSkipLog(a->skips), FormatSkipLog(b->skips));
  }
}

TEST(DedupKeyTest, CaseWhitespaceAndEquationSpelling) {
  const auto a = Make("a", "Fred has  4 dimes.", "X=7-3", 4);
  const auto b = Make("b", "fred has 4 DIMES.", "X = 7 - 3", 4);
  const auto c = Make("c", "fred has 4 DIMES.", "X=(7-3)", 4);
  const auto d = Make("d", "fred has 4 DIMES.", "X=7+(-3)", 4);
  EXPECT_EQ(MakeDedupKey(a), MakeDedupKey(b));
  EXPECT_EQ(MakeDedupKey(a), MakeDedupKey(c));
  EXPECT_NE(MakeDedupKey(a), MakeDedupKey(d));
}

class BuildCombinedTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int i = 0; i < 4; ++i) {
      originals_.push_back(Make("o" + std::to_string(i),
                                "Sam has " + std::to_string(i + 2) +
                                    " pens. How many pens does Sam have?",
                                "X=" + std::to_string(i + 2), i + 2));
    }
    for (int i = 0; i < 3; ++i) {
      qr_.push_back(Make("q" + std::to_string(i),
                         "What is 1/2 of the " + std::to_string(i + 10) +
                             " pens?",
                         "X=" + std::to_string(i + 10) + "*(1/2)",
                         (i + 10) / 2.0, Provenance::kQuestionRepl));
    }
    for (int i = 0; i < 2; ++i) {
      rev_.push_back(Make("r" + std::to_string(i),
                          "Sam has 9 pens now. How many pens did Sam buy " +
                              std::to_string(i) + " times?",
                          "9=X+" + std::to_string(i + 1), 8 - i,
                          Provenance::kReverse));
    }
  }

  CombinedInputs Inputs() {
    qr_run_ = EmissionsOnly(qr_);
    rev_run_ = EmissionsOnly(rev_);
    CombinedInputs inputs;
    inputs.originals = &originals_;
    inputs.question_repl = &qr_run_;
    inputs.reverse = &rev_run_;
    return inputs;
  }

  std::vector<MwpRecord> originals_, qr_, rev_;
  MethodRun qr_run_, rev_run_;
};

TEST_F(BuildCombinedTest, DisjointUnion) {
  auto v1 = BuildCombined(Variant::kV1, Inputs(), V1Mode::kUnion);
  ASSERT_TRUE(v1.ok()) << v1.status();
  ASSERT_EQ(v1->size(), 9u);
  EXPECT_EQ((*v1)[0].id, "o0");
  EXPECT_EQ((*v1)[4].id, "q0");
  EXPECT_EQ((*v1)[7].id, "r0");
}

TEST_F(BuildCombinedTest, CollisionKeepsFirst) {
  rev_[1].text = "  what is 1/2 of the 10 PENS?";
  rev_[1].equation = "X = 10 * (1/2)";
  rev_[1].answer = 5;
  auto v1 = BuildCombined(Variant::kV1, Inputs(), V1Mode::kUnion);
  ASSERT_TRUE(v1.ok());
  ASSERT_EQ(v1->size(), 8u);
  EXPECT_EQ(std::count_if(v1->begin(), v1->end(),
                          [](const MwpRecord& r) { return r.id == "r1"; }),
            0);
  EXPECT_EQ(Keys(*v1).size(), v1->size());
}

TEST_F(BuildCombinedTest, ConcatKeepsBothMethodSets) {
  auto inputs = Inputs();
  qr_run_.records = originals_;
  qr_run_.records.insert(qr_run_.records.end(), qr_.begin(), qr_.end());
  rev_run_.records = originals_;
  rev_run_.records.insert(rev_run_.records.end(), rev_.begin(), rev_.end());
  auto v1 = BuildCombined(Variant::kV1, inputs, V1Mode::kConcat);
  ASSERT_TRUE(v1.ok());
  EXPECT_EQ(v1->size(), 7u + 6u);
}

TEST_F(BuildCombinedTest, MissingInputSet) {
  auto inputs = Inputs();
  auto v2 = BuildCombined(Variant::kV2, inputs, V1Mode::kUnion);
  ASSERT_FALSE(v2.ok());
  EXPECT_EQ(v2.status().message().substr(0, 17), "missing-input-set");
  auto v3 = BuildCombined(Variant::kV3, inputs, V1Mode::kUnion);
  EXPECT_FALSE(v3.ok());
  inputs.reverse = nullptr;
  EXPECT_FALSE(BuildCombined(Variant::kV1, inputs, V1Mode::kUnion).ok());
}

TEST_F(BuildCombinedTest, IclCopiesOfOriginalsExcluded) {
  auto inputs = Inputs();
  MethodRun icl = EmissionsOnly(
      {Make("o0:icl", originals_[0].text + " ", "X=5", 5, Provenance::kIcl),
       Make("o1:icl", "Sam owns 3 pens. What is his pen count?", "X=3", 3,
            Provenance::kIcl)});
  MethodRun icl2 = EmissionsOnly({Make("o1:icl2",
                                       "Sam holds 6 pens. Count them?", "X=6",
                                       6, Provenance::kIclRound2)});
  inputs.icl_round1 = &icl;
  inputs.icl_round2 = &icl2;
  auto v3 = BuildCombined(Variant::kV3, inputs, V1Mode::kUnion);
  auto v4 = BuildCombined(Variant::kV4, inputs, V1Mode::kUnion);
  ASSERT_TRUE(v3.ok() && v4.ok());
  EXPECT_EQ(v3->size(), 10u);
  EXPECT_EQ(v3->back().id, "o1:icl");
  EXPECT_EQ(v4->size(), 11u);
}

TEST(StatsTest, ZeroRecordRunWritesHeaderOnly) {
  TempDir dir;
  ASSERT_TRUE(corpus::WriteFile(dir.path() / "empty.jsonl", "").ok());
  AugmentConfig config;
  config.input = dir.path() / "empty.jsonl";
  config.output_dir = dir.path() / "out";
  config.methods = {Method::kQuestionRepl, Method::kReverse};
  config.combined = {Variant::kV1};
  auto result = RunAugment(config);
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(*corpus::ReadFile(result->run_dir / "stats.tsv"),
            "dataset\ttrainset\tquestion_repl\treversing_question\t"
            "synonym_repl\ticl\tcombined_v1\tcombined_v2\tcombined_v3\t"
            "combined_v4\n");
  EXPECT_EQ(*corpus::ReadFile(result->run_dir / "skips.jsonl"), "");
}

TEST(StatsTest, RefusesBrokenAccounting) {
  TempDir dir;
  RunStats stats;
  stats.trainset = 3;
  MethodStats m;
  m.method = "reverse";
  m.inputs = 3;
  m.emitted = 2;
  stats.methods.push_back(m);
  const absl::Status s = EmitStats(stats, dir.path());
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.message().substr(0, 19), "invariant-violation");
  EXPECT_TRUE(std::filesystem::is_empty(dir.path()));
  stats.methods[0].skipped["no-question-pattern"] = 1;
  EXPECT_TRUE(EmitStats(stats, dir.path()).ok());
}

TEST(StatsTest, TsvRowLayout) {
  RunStats stats;
  stats.dataset = "mawps";
  stats.trainset = 1589;
  stats.synonym_repl = 3178;
  stats.combined["v1"] = 5599;
  EXPECT_EQ(FormatStatsTsv(stats).substr(FormatStatsTsv(stats).find('\n') + 1),
            "mawps\t1589\t-\t-\t3178\t-\t5599\t-\t-\t-\n");
}

TEST(RunAugmentTest, FullRunProperties) {
  TempDir dir;
  const auto problems = GenerateProblems(80, 3);
  AugmentConfig config = FullConfig(dir, 80, problems);
  auto result = RunAugment(config);
  ASSERT_TRUE(result.ok()) << result.status();
  const auto& run = result->run_dir;
  EXPECT_EQ(run.filename(), "run-seed20240101");

  std::map<std::string, std::vector<MwpRecord>> sets;
  for (const char* v : {"v1", "v2", "v3", "v4"}) {
    sets[v] = ReadSet(run / "combined" / (std::string(v) + ".jsonl"));
  }
  EXPECT_TRUE(Includes(sets["v2"], sets["v1"]));
  EXPECT_TRUE(Includes(sets["v3"], sets["v1"]));
  EXPECT_TRUE(Includes(sets["v4"], sets["v3"]));
  EXPECT_LE(sets["v1"].size(), sets["v2"].size());
  EXPECT_LE(sets["v1"].size(), sets["v3"].size());
  EXPECT_LE(sets["v3"].size(), sets["v4"].size());
  EXPECT_GT(sets["v4"].size(), sets["v3"].size());

  for (const auto& entry : std::filesystem::recursive_directory_iterator(run)) {
    if (entry.path().extension() != ".jsonl" ||
        entry.path().filename() == "skips.jsonl" ||
        entry.path().filename() == "rejects.jsonl") {
      continue;
    }
    const auto records = ReadSet(entry.path());
    EXPECT_EQ(Keys(records).size(), records.size()) << entry.path();
    for (const auto& r : records) {
      auto eq = mathexpr::ParseEquation(r.equation);
      ASSERT_TRUE(eq.ok()) << r.id;
      EXPECT_TRUE(mathexpr::IsConsistent(*eq, r.answer)) << r.id;
    }
  }

  // The written table matches a recount of the written sets.
  auto recount = RecountStats(run);
  ASSERT_TRUE(recount.ok()) << recount.status();
  EXPECT_EQ(FormatStatsTsv(*recount), *corpus::ReadFile(run / "stats.tsv"));
  EXPECT_EQ(recount->synonym_repl, 160u);
}

TEST(RunAugmentTest, ByteIdenticalAcrossWorkerCounts) {
  TempDir dir;
  const auto problems = GenerateProblems(48, 9);
  AugmentConfig config = FullConfig(dir, 48, problems);
  config.seed = 7;
  auto first = RunAugment(config);
  ASSERT_TRUE(first.ok()) << first.status();
  const auto tree_one = ReadTree(first->run_dir);
  config.workers = 8;
  config.output_dir = dir.path() / "out8";
  auto second = RunAugment(config);
  ASSERT_TRUE(second.ok());
  EXPECT_EQ(tree_one, ReadTree(second->run_dir));
  EXPECT_GE(tree_one.size(), 13u);
}

TEST(RunAugmentTest, RerunReplacesDirectory) {
  TempDir dir;
  const auto problems = GenerateProblems(8, 1);
  AugmentConfig config = FullConfig(dir, 8, problems);
  auto first = RunAugment(config);
  ASSERT_TRUE(first.ok());
  ASSERT_TRUE(corpus::WriteFile(first->run_dir / "stray.txt", "x").ok());
  auto second = RunAugment(config);
  ASSERT_TRUE(second.ok());
  EXPECT_FALSE(std::filesystem::exists(second->run_dir / "stray.txt"));
}

TEST(RunAugmentTest, ErrorClasses) {
  TempDir dir;
  AugmentConfig config;
  config.input = dir.path() / "missing.jsonl";
  config.output_dir = dir.path() / "out";
  config.methods = {Method::kIcl};
  auto no_llm = RunAugment(config);
  ASSERT_FALSE(no_llm.ok());
  EXPECT_EQ(ClassifyError(no_llm.status()), ErrorClass::kConfig);

  config.methods = {Method::kReverse};
  auto no_input = RunAugment(config);
  ASSERT_FALSE(no_input.ok());
  EXPECT_EQ(ClassifyError(no_input.status()), ErrorClass::kData);

  ASSERT_TRUE(corpus::WriteCorpus({FredRecord()}, config.input).ok());
  config.methods = {Method::kSynonym};
  config.lexicon = dir.path() / "no-lexicon.tsv";
  auto no_lexicon = RunAugment(config);
  ASSERT_FALSE(no_lexicon.ok());
  EXPECT_EQ(ClassifyError(no_lexicon.status()), ErrorClass::kConfig);

  EXPECT_EQ(ClassifyError(absl::UnavailableError("transport-failure: x")),
            ErrorClass::kTransport);
  EXPECT_EQ(ClassifyError(absl::DeadlineExceededError("timeout")),
            ErrorClass::kTransport);
  EXPECT_EQ(ClassifyError(absl::FailedPreconditionError("endpoint-error 404")),
            ErrorClass::kTransport);
}

TEST(RunAugmentTest, EndpointFailureIsTransportError) {
  TempDir dir;
  AugmentConfig config;
  config.input = dir.path() / "in.jsonl";
  ASSERT_TRUE(corpus::WriteCorpus({FredRecord()}, config.input).ok());
  config.output_dir = dir.path() / "out";
  config.methods = {Method::kIcl};
  llm::LlmEndpointConfig endpoint;
  endpoint.base_url = "http://127.0.0.1:1/v1";
  endpoint.model_name = "m";
  endpoint.max_retries = 0;
  endpoint.timeout = std::chrono::milliseconds(500);
  config.endpoint = endpoint;
  auto result = RunAugment(config);
  ASSERT_FALSE(result.ok());
  EXPECT_EQ(ClassifyError(result.status()), ErrorClass::kTransport);
  EXPECT_FALSE(std::filesystem::exists(config.output_dir));
}

TEST(ConfigTest, CrossFieldRules) {
  AugmentConfig config;
  config.input = "in.jsonl";
  config.output_dir = "out";
  config.methods = {Method::kReverse};
  EXPECT_TRUE(ValidateConfig(config).ok());

  AugmentConfig v1 = config;
  v1.combined = {Variant::kV1};
  EXPECT_FALSE(ValidateConfig(v1).ok());
  v1.methods = {Method::kQuestionRepl, Method::kReverse};
  EXPECT_TRUE(ValidateConfig(v1).ok());

  AugmentConfig v2 = v1;
  v2.combined = {Variant::kV2};
  EXPECT_FALSE(ValidateConfig(v2).ok());
  v2.lexicon = "lex.tsv";
  EXPECT_TRUE(ValidateConfig(v2).ok());

  AugmentConfig v3 = v1;
  v3.combined = {Variant::kV3};
  EXPECT_FALSE(ValidateConfig(v3).ok());
  v3.methods.push_back(Method::kIcl);
  EXPECT_FALSE(ValidateConfig(v3).ok());
  v3.mock_llm = "mock.jsonl";
  EXPECT_TRUE(ValidateConfig(v3).ok());
  v3.endpoint = llm::LlmEndpointConfig{};
  EXPECT_FALSE(ValidateConfig(v3).ok());

  AugmentConfig fixer = config;
  fixer.methods = {Method::kQuestionRepl};
  fixer.fixer = FixerKind::kLlm;
  EXPECT_FALSE(ValidateConfig(fixer).ok());

  AugmentConfig workers = config;
  workers.workers = 0;
  EXPECT_FALSE(ValidateConfig(workers).ok());

  for (const AugmentConfig& bad : {v1, v2, workers}) {
    const absl::Status s = ValidateConfig(bad);
    if (!s.ok()) {
      EXPECT_EQ(ClassifyError(s), ErrorClass::kConfig);
    }
  }
}

TEST(ConfigTest, RunJsonLeavesOutExecutionAndSecrets) {
  AugmentConfig config;
  config.input = "in.jsonl";
  config.output_dir = "out";
  config.methods = {Method::kIcl};
  llm::LlmEndpointConfig endpoint;
  endpoint.base_url = "http://localhost:8000/v1";
  endpoint.model_name = "m";
  endpoint.api_key = "secret-key";
  config.endpoint = endpoint;
  config.workers = 8;
  const std::string json = ConfigToJson(config);
  EXPECT_EQ(json.find("secret-key"), std::string::npos);
  EXPECT_EQ(json.find("workers"), std::string::npos);
  EXPECT_EQ(json.find("\"out\""), std::string::npos);
  const auto parsed = nlohmann::json::parse(json);
  EXPECT_EQ(parsed.at("seed"), kDefaultSeed);
  EXPECT_EQ(parsed.at("methods"), nlohmann::json::array({"icl"}));
}

}  // namespace
}  // namespace mwpaug::pipeline
