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

#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "mwpaug/corpus/alignment.h"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/corpus/numbers.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/random.h"
#include "test_util.h"

namespace mwpaug::corpus {
namespace {

using ::mwpaug::testing::FredRecord;
using ::mwpaug::testing::SourcePath;
using ::mwpaug::testing::TempDir;

std::vector<double> Values(const std::vector<NumberToken>& tokens) {
  std::vector<double> out;
  for (const auto& t : tokens) out.push_back(t.value);
  return out;
}

TEST(ExtractNumbersTest, FredText) {
  const std::string text = FredRecord().text;
  const auto tokens = ExtractNumbers(text);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].value, 7);
  EXPECT_EQ(text.substr(tokens[0].start, tokens[0].end - tokens[0].start), "7");
  EXPECT_EQ(tokens[0].start, 9u);
  EXPECT_EQ(tokens[1].value, 3);
  EXPECT_EQ(text.substr(tokens[1].start, 1), "3");
  EXPECT_EQ(tokens[0].kind, NumberKind::kInteger);
}

TEST(ExtractNumbersTest, NoNumbers) {
  EXPECT_TRUE(ExtractNumbers("no numbers here?").empty());
}

TEST(ExtractNumbersTest, FloatSpansSliceBack) {
  const std::string text =
      "There were 8.0 friends playing a video game online when 5.0 players "
      "quit.";
  const auto tokens = ExtractNumbers(text);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(text.substr(tokens[0].start, tokens[0].end - tokens[0].start),
            "8.0");
  EXPECT_EQ(text.substr(tokens[1].start, tokens[1].end - tokens[1].start),
            "5.0");
  EXPECT_EQ(tokens[0].start, 11u);
  EXPECT_EQ(tokens[1].start, 56u);
  EXPECT_EQ(tokens[0].kind, NumberKind::kFloat);
  EXPECT_EQ(tokens[1].kind, NumberKind::kFloat);
  EXPECT_EQ(Values(tokens), (std::vector<double>{8.0, 5.0}));
}

TEST(ExtractNumbersTest, EdgeCases) {
  EXPECT_TRUE(ExtractNumbers("Room B2 is closed.").empty());
  EXPECT_TRUE(ExtractNumbers("the 2nd day").empty());
  EXPECT_EQ(Values(ExtractNumbers("It cost $10.22.")),
            (std::vector<double>{10.22}));
  EXPECT_EQ(ExtractNumbers("a $ 10.22 toy")[0].surface, "10.22");
  EXPECT_EQ(Values(ExtractNumbers("a 25.0% profit")),
            (std::vector<double>{25.0}));
  EXPECT_EQ(Values(ExtractNumbers("values 3, 4 and 5.")),
            (std::vector<double>{3, 4, 5}));
  EXPECT_EQ(Values(ExtractNumbers("1-2")), (std::vector<double>{1, 2}));
}

TEST(ExtractNumbersTest, TokenInvariants) {
  SeededRandom rng(5);
  for (int i = 0; i < 200; ++i) {
    std::string text;
    for (int w = 0; w < 12; ++w) {
      switch (rng.UniformInt(0, 3)) {
        case 0:
          text += std::to_string(rng.UniformInt(0, 999));
          break;
        case 1:
          text += std::to_string(rng.UniformInt(0, 99)) + "." +
                  std::to_string(rng.UniformInt(0, 9));
          break;
        case 2:
          text += "apples";
          break;
        default:
          text += "$";
          text += std::to_string(rng.UniformInt(1, 9));
      }
      text += w % 3 == 0 ? " , " : " ";
    }
    for (const NumberToken& t : ExtractNumbers(text)) {
      const std::string slice = text.substr(t.start, t.end - t.start);
      EXPECT_EQ(slice, t.surface);
      EXPECT_EQ(std::stod(slice), t.value);
      EXPECT_EQ(t.kind == NumberKind::kFloat,
                slice.find('.') != std::string::npos);
    }
  }
}

TEST(UnsupportedFormatTest, Detects) {
  EXPECT_TRUE(HasUnsupportedNumberFormat("A town has 1,200 people."));
  EXPECT_TRUE(HasUnsupportedNumberFormat("about 1e5 cells"));
  EXPECT_TRUE(HasUnsupportedNumberFormat("about 2.5E-3 grams"));
  EXPECT_FALSE(HasUnsupportedNumberFormat("29.0, 16.0, and 20.0"));
  EXPECT_FALSE(HasUnsupportedNumberFormat("3,4 and 5"));
  EXPECT_FALSE(HasUnsupportedNumberFormat("5 eggs"));
  EXPECT_FALSE(HasUnsupportedNumberFormat("room B2e5"));
}

TEST(FormatSurfaceTest, KindDrivesFormatting) {
  EXPECT_EQ(FormatSurface(23, NumberKind::kInteger, 1), "23");
  EXPECT_EQ(FormatSurface(23, NumberKind::kFloat, 1), "23.0");
  EXPECT_EQ(FormatSurface(4.25, NumberKind::kFloat, 2), "4.25");
}

TEST(AlignTest, Fred) {
  auto alignment = AlignRecord(FredRecord());
  ASSERT_TRUE(alignment.ok());
  EXPECT_EQ(alignment->pairs,
            (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
  EXPECT_TRUE(alignment->text_only.empty());
  EXPECT_TRUE(alignment->equation_only.empty());
}

TEST(AlignTest, GreedyLeavesLeftovers) {
  MwpRecord r;
  r.text = "She has 5 pens and 5 pencils. How many?";
  r.equation = "X=5*2";
  r.answer = 10;
  auto alignment = AlignRecord(r);
  ASSERT_TRUE(alignment.ok());
  EXPECT_EQ(alignment->pairs, (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(alignment->text_only, (std::vector<int>{1}));
  EXPECT_EQ(alignment->equation_only, (std::vector<int>{1}));
}

TEST(AlignTest, NumberlessText) {
  MwpRecord r;
  r.text = "How many are there?";
  r.equation = "X=1+1";
  r.answer = 2;
  auto alignment = AlignRecord(r);
  ASSERT_TRUE(alignment.ok());
  EXPECT_TRUE(alignment->pairs.empty());
  EXPECT_EQ(alignment->equation_only, (std::vector<int>{0, 1}));
}

TEST(AlignTest, IntegerMatchesFloatSurface) {
  MwpRecord r;
  r.text = "There are 96.0 oranges. Jonathan takes 45 oranges. How many?";
  r.equation = "X=96-45.0";
  r.answer = 51;
  auto alignment = AlignRecord(r);
  ASSERT_TRUE(alignment.ok());
  EXPECT_EQ(alignment->pairs,
            (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST(AlignTest, DeterministicAndPairsAreUnique) {
  SeededRandom rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<NumberToken> tokens;
    std::vector<double> literals;
    for (int k = 0; k < 6; ++k) {
      NumberToken t;
      t.value = static_cast<double>(rng.UniformInt(1, 4));
      tokens.push_back(t);
      literals.push_back(static_cast<double>(rng.UniformInt(1, 4)));
    }
    const NumberAlignment a = AlignNumbers(tokens, literals);
    EXPECT_EQ(a, AlignNumbers(tokens, literals));
    std::vector<int> seen_t(tokens.size()), seen_l(literals.size());
    for (auto [t, l] : a.pairs) {
      EXPECT_EQ(tokens[t].value, literals[l]);
      ++seen_t[t];
      ++seen_l[l];
    }
    for (int t : a.text_only) ++seen_t[t];
    for (int l : a.equation_only) ++seen_l[l];
    for (int c : seen_t) EXPECT_EQ(c, 1);
    for (int c : seen_l) EXPECT_EQ(c, 1);
  }
}

TEST(LoadCorpusTest, SvampFixture) {
  auto loaded = LoadCorpus(SourcePath("fixtures/corpus/svamp_sample.json"),
                           CorpusFormat::kSvampJson);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  ASSERT_EQ(loaded->records.size(), 5u);
  const MwpRecord& fred = loaded->records[0];
  EXPECT_EQ(fred.id, "fred");
  EXPECT_EQ(fred.text, FredRecord().text);
  EXPECT_EQ(fred.answer, 4);
  EXPECT_EQ(fred.provenance, Provenance::kOriginal);
  EXPECT_FALSE(fred.parent_id.has_value());
  EXPECT_EQ(loaded->records[1].equation, "X=( ( 3.0 + 5.0 ) * 3.0 )");

  ASSERT_EQ(loaded->rejects.size(), 2u);
  EXPECT_EQ(loaded->rejects[0].id, "truncated");
  EXPECT_EQ(loaded->rejects[0].reason.rfind("parse-error", 0), 0u);
  EXPECT_EQ(loaded->rejects[1].id, "wrong-answer");
  EXPECT_EQ(loaded->rejects[1].reason.rfind("answer-mismatch", 0), 0u);
}

TEST(LoadCorpusTest, MawpsFixture) {
  auto loaded = LoadCorpus(SourcePath("fixtures/corpus/mawps_sample.json"),
                           CorpusFormat::kMawpsJson);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  ASSERT_EQ(loaded->records.size(), 2u);
  EXPECT_EQ(loaded->records[0].id, "1");
  EXPECT_EQ(loaded->records[0].answer, 35.0);
  ASSERT_EQ(loaded->rejects.size(), 3u);
  EXPECT_EQ(loaded->rejects[0].reason, "multi-equation");
  EXPECT_EQ(loaded->rejects[1].reason.rfind("unsupported-number-format", 0),
            0u);
  EXPECT_EQ(loaded->rejects[2].reason.rfind("unknown-count", 0), 0u);
}

TEST(LoadCorpusTest, BundledSampleIsConsistent) {
  auto loaded = LoadCorpus(SourcePath("fixtures/corpus/sample.jsonl"),
                           CorpusFormat::kUnifiedJsonl);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->records.size(), 12u);
  EXPECT_TRUE(loaded->rejects.empty());
}

TEST(LoadCorpusTest, EmptyInput) {
  for (CorpusFormat f : {CorpusFormat::kSvampJson, CorpusFormat::kMawpsJson,
                         CorpusFormat::kUnifiedJsonl}) {
    auto loaded = ParseCorpus("", f);
    ASSERT_TRUE(loaded.ok());
    EXPECT_TRUE(loaded->records.empty());
    EXPECT_TRUE(loaded->rejects.empty());
  }
}

TEST(LoadCorpusTest, MalformedEquationIsRejectedNotDropped) {
  auto loaded = ParseCorpus(
      R"([{"Body":"Fred had 7 dimes .","Question":"How many?",)"
      R"("Equation":"X=7-","Answer":4}])",
      CorpusFormat::kSvampJson);
  ASSERT_TRUE(loaded.ok());
  EXPECT_TRUE(loaded->records.empty());
  ASSERT_EQ(loaded->rejects.size(), 1u);
  EXPECT_EQ(loaded->rejects[0].id, "svamp-0");
  EXPECT_NE(loaded->rejects[0].reason.find("offset 4"), std::string::npos);
}

TEST(LoadCorpusTest, ContainerErrors) {
  EXPECT_EQ(ParseCorpus("{not json", CorpusFormat::kSvampJson).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(ParseCorpus(R"({"a":1})", CorpusFormat::kMawpsJson).ok());
  auto missing = LoadCorpus("/nonexistent/file.json", CorpusFormat::kSvampJson);
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.status().code(), absl::StatusCode::kNotFound);
}

TEST(LoadCorpusTest, JsonlLineRejects) {
  const std::string content =
      "{\"id\":\"a\",\"text\":\"Sam has 2 and 3. How many?\",\"equation\":"
      "\"X=2+3\",\"answer\":5}\n"
      "{broken\n"
      "\n"
      "{\"id\":\"c\",\"text\":\"t?\",\"equation\":\"X=1\",\"answer\":1,"
      "\"provenance\":\"bogus\"}\n";
  auto loaded = ParseCorpus(content, CorpusFormat::kUnifiedJsonl);
  ASSERT_TRUE(loaded.ok());
  ASSERT_EQ(loaded->records.size(), 1u);
  ASSERT_EQ(loaded->rejects.size(), 2u);
  EXPECT_EQ(loaded->rejects[0].reason, "malformed-json");
  EXPECT_EQ(loaded->rejects[1].reason, "bad-field: provenance");
}

TEST(WriteCorpusTest, SingleRecordRoundTrip) {
  TempDir dir;
  MwpRecord r = FredRecord();
  r.provenance = Provenance::kReverse;
  r.parent_id = "fred-parent";
  ASSERT_TRUE(WriteCorpus({r}, dir.path() / "out.jsonl").ok());
  auto content = ReadFile(dir.path() / "out.jsonl");
  ASSERT_TRUE(content.ok());
  EXPECT_EQ(*content,
            "{\"id\":\"fred\",\"text\":\"Fred had 7 dimes in his bank . His "
            "sister borrowed 3 of his dimes . How many dimes does Fred have "
            "now?\",\"equation\":\"X=7-3\",\"answer\":4.0,\"provenance\":"
            "\"reverse\",\"parent_id\":\"fred-parent\"}\n");
  auto loaded = LoadCorpus(dir.path() / "out.jsonl",
                           CorpusFormat::kUnifiedJsonl);
  ASSERT_TRUE(loaded.ok());
  ASSERT_EQ(loaded->records.size(), 1u);
  EXPECT_EQ(loaded->records[0], r);
}

TEST(WriteCorpusTest, InconsistentRecordWritesNothing) {
  TempDir dir;
  MwpRecord bad = FredRecord();
  bad.answer = 5;
  const auto path = dir.path() / "bad.jsonl";
  absl::Status status = WriteCorpus({FredRecord(), bad}, path);
  ASSERT_FALSE(status.ok());
  EXPECT_EQ(status.code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(WriteCorpusTest, PreservesOrderAndIsByteStable) {
  std::vector<MwpRecord> records;
  for (int i = 0; i < 3; ++i) {
    MwpRecord r = FredRecord();
    r.id = "r" + std::to_string(i);
    records.push_back(r);
  }
  auto first = SerializeCorpus(records);
  auto second = SerializeCorpus(records);
  ASSERT_TRUE(first.ok());
  EXPECT_EQ(*first, *second);
  auto loaded = ParseCorpus(*first, CorpusFormat::kUnifiedJsonl);
  ASSERT_TRUE(loaded.ok());
  ASSERT_EQ(loaded->records.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(loaded->records[i].id, "r" + std::to_string(i));
  }
}

// load(write(R)) == R for randomly generated valid records.
TEST(WriteCorpusTest, RoundTripProperty) {
  SeededRandom rng(17);
  std::vector<MwpRecord> records;
  for (int i = 0; i < 300; ++i) {
    const double a = static_cast<double>(rng.UniformInt(1, 500)) / 10.0;
    const double b = static_cast<double>(rng.UniformInt(1, 500)) / 4.0;
    MwpRecord r;
    r.id = "rec-" + std::to_string(i);
    r.text = "Ann has " + mathexpr::FormatNumber(a) + " \xC3\xA9pices and " +
             mathexpr::FormatNumber(b) + " \"jars\" . How many?";
    const int op = static_cast<int>(rng.UniformInt(0, 3));
    const char ops[] = {'+', '-', '*', '/'};
    r.equation = "X=" + mathexpr::FormatNumber(a) + ops[op] +
                 mathexpr::FormatNumber(b);
    r.answer = op == 0 ? a + b : op == 1 ? a - b : op == 2 ? a * b : a / b;
    r.provenance = static_cast<Provenance>(rng.UniformInt(0, 5));
    if (rng.UniformInt(0, 1) == 1) r.parent_id = "p" + std::to_string(i);
    records.push_back(r);
  }
  auto text = SerializeCorpus(records);
  ASSERT_TRUE(text.ok()) << text.status();
  auto loaded = ParseCorpus(*text, CorpusFormat::kUnifiedJsonl);
  ASSERT_TRUE(loaded.ok());
  EXPECT_TRUE(loaded->rejects.empty());
  EXPECT_EQ(loaded->records, records);
}

TEST(RecordTest, Validation) {
  EXPECT_TRUE(ValidateRecord(FredRecord()).ok());
  MwpRecord blank = FredRecord();
  blank.text = " \n ";
  EXPECT_EQ(ValidateRecord(blank).message(), "empty-text");
  MwpRecord two = FredRecord();
  two.equation = "X=X-3";
  EXPECT_EQ(std::string(ValidateRecord(two).message()).rfind("unknown-count", 0),
            0u);
  EXPECT_EQ(NormalizeWhitespace("  a \t b\n\nc  "), "a b c");
}

TEST(RecordTest, ProvenanceNames) {
  EXPECT_EQ(ProvenanceName(Provenance::kQuestionRepl), "question_repl");
  EXPECT_EQ(ParseProvenance("icl_round2"), Provenance::kIclRound2);
  EXPECT_FALSE(ParseProvenance("nope").has_value());
}

}  // namespace
}  // namespace mwpaug::corpus
