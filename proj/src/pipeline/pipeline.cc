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

#include <atomic>
#include <optional>
#include <set>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "mwpaug/augment/icl.h"
#include "mwpaug/augment/question_replace.h"
#include "mwpaug/augment/reverse.h"
#include "mwpaug/augment/text_util.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/random.h"

namespace mwpaug::pipeline {
namespace {

using corpus::MwpRecord;

// What one input record produced.
struct RecordResult {
  std::vector<MwpRecord> emitted;
  std::string skip_reason;
  std::string note;
};

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

absl::StatusOr<RecordResult> ProcessRecord(Method method,
                                           const MwpRecord& record,
                                           const MethodContext& ctx,
                                           int round) {
  const AugmentConfig& config = *ctx.config;
  RecordResult result;
  switch (method) {
    case Method::kSynonym: {
      SeededRandom rng(DeriveSeed(config.seed, record.id, "synonym"));
      auto out = augment::SynonymReplace(record, *ctx.lexicon, rng,
                                         config.max_replacements);
      if (out) {
        result.emitted.push_back(*std::move(out));
      } else {
        result.skip_reason = "no-candidates";
      }
      return result;
    }
    case Method::kQuestionRepl: {
      SeededRandom rng(DeriveSeed(config.seed, record.id, "question_repl"));
      auto out = augment::QuestionReplace(record, rng, *ctx.fixer);
      if (!out.ok()) {
        if (StartsWith(std::string(out.status().message()), "template-form")) {
          result.skip_reason = "template-form";
          return result;
        }
        return out.status();
      }
      if (*out) {
        result.emitted.push_back(**std::move(out));
      } else {
        result.skip_reason = "no-cue";
      }
      return result;
    }
    case Method::kReverse: {
      SeededRandom rng(DeriveSeed(config.seed, record.id, "reverse"));
      augment::ReverseOptions options;
      options.emit_all = config.reverse_all;
      options.support_position = config.reverse_support;
      auto out = augment::ReverseQuestion(record, rng, options);
      if (!out.ok()) return out.status();
      result.emitted = std::move(out->records);
      result.skip_reason = std::move(out->skip_reason);
      return result;
    }
    case Method::kIcl: {
      SeededRandom rng(DeriveSeed(config.seed, record.id, "icl", round));
      auto out = augment::IclRephrase(record, *ctx.prompt, *ctx.client, rng,
                                      config.policy, round);
      if (!out.ok()) return out.status();
      if (out->record) result.emitted.push_back(*std::move(out->record));
      result.skip_reason = std::move(out->skip_reason);
      result.note = std::move(out->note);
      return result;
    }
  }
  return absl::InternalError("unknown method");
}

absl::Status CheckContext(Method method, const MethodContext& ctx) {
  if (ctx.config == nullptr) {
    return absl::InvalidArgumentError("config: no configuration");
  }
  switch (method) {
    case Method::kSynonym:
      if (ctx.lexicon == nullptr) {
        return absl::InvalidArgumentError("config: synonym needs a lexicon");
      }
      break;
    case Method::kQuestionRepl:
      if (ctx.fixer == nullptr) {
        return absl::InvalidArgumentError("config: qr needs a text fixer");
      }
      break;
    case Method::kReverse:
      break;
    case Method::kIcl:
      if (ctx.client == nullptr || ctx.prompt == nullptr) {
        return absl::InvalidArgumentError(
            "config: icl needs a completion client and a prompt template");
      }
      break;
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<MethodRun> RunMethod(Method method,
                                    const std::vector<MwpRecord>& corpus,
                                    const MethodContext& context, int round) {
  if (absl::Status s = CheckContext(method, context); !s.ok()) return s;

  std::vector<std::optional<absl::StatusOr<RecordResult>>> slots(corpus.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < corpus.size(); i = next++) {
      slots[i] = ProcessRecord(method, corpus[i], context, round);
    }
  };
  const int workers = std::max(
      1, std::min<int>(context.config->workers, static_cast<int>(corpus.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  MethodRun run;
  run.stats.method = std::string(MethodName(method));
  run.stats.round = round;
  run.stats.inputs = corpus.size();
  run.records = corpus;
  for (size_t i = 0; i < corpus.size(); ++i) {
    // The lowest failing index wins, whatever the schedule was.
    if (!slots[i]->ok()) return slots[i]->status();
    RecordResult& r = **slots[i];
    if (r.emitted.empty()) {
      ++run.stats.skipped[r.skip_reason];
      run.skips.push_back(
          {run.stats.method, round, corpus[i].id, r.skip_reason});
      continue;
    }
    ++run.stats.emitted;
    run.stats.records_emitted += r.emitted.size();
    if (!r.note.empty()) ++run.stats.notes[r.note];
    for (MwpRecord& e : r.emitted) run.emissions.push_back(std::move(e));
  }
  run.records.insert(run.records.end(), run.emissions.begin(),
                     run.emissions.end());
  return run;
}

DedupKey MakeDedupKey(const MwpRecord& record) {
  std::string text = augment::AsciiLower(corpus::NormalizeWhitespace(record.text));
  auto eq = mathexpr::ParseEquation(record.equation);
  std::string equation = eq.ok() ? mathexpr::Canonicalize(*eq)
                                 : corpus::NormalizeWhitespace(record.equation);
  return {std::move(text), std::move(equation)};
}

std::vector<MwpRecord> Extend(const std::vector<MwpRecord>& base,
                              const std::vector<MwpRecord>& additions) {
  std::set<DedupKey> seen;
  for (const MwpRecord& r : base) seen.insert(MakeDedupKey(r));
  std::vector<MwpRecord> out = base;
  for (const MwpRecord& r : additions) {
    if (seen.insert(MakeDedupKey(r)).second) out.push_back(r);
  }
  return out;
}

namespace {

// ICL records whose text repeats an original text do not count as new data.
std::vector<MwpRecord> WithoutOriginalTexts(
    const std::vector<MwpRecord>& records,
    const std::vector<MwpRecord>& originals) {
  std::set<std::string> texts;
  for (const MwpRecord& r : originals) {
    texts.insert(corpus::NormalizeWhitespace(r.text));
  }
  std::vector<MwpRecord> out;
  for (const MwpRecord& r : records) {
    if (!texts.contains(corpus::NormalizeWhitespace(r.text))) out.push_back(r);
  }
  return out;
}

absl::Status Missing(const char* what) {
  return absl::FailedPreconditionError(std::string("missing-input-set: ") +
                                       what);
}

}  // namespace

absl::StatusOr<std::vector<MwpRecord>> BuildCombined(
    Variant variant, const CombinedInputs& inputs, V1Mode v1_mode) {
  if (inputs.originals == nullptr) return Missing("originals");
  if (inputs.question_repl == nullptr) return Missing("question_repl");
  if (inputs.reverse == nullptr) return Missing("reverse");

  std::vector<MwpRecord> v1;
  if (v1_mode == V1Mode::kUnion) {
    v1 = Extend({}, *inputs.originals);
    v1 = Extend(v1, inputs.question_repl->emissions);
    v1 = Extend(v1, inputs.reverse->emissions);
  } else {
    v1 = inputs.question_repl->records;
    v1.insert(v1.end(), inputs.reverse->records.begin(),
              inputs.reverse->records.end());
  }
  switch (variant) {
    case Variant::kV1:
      return v1;
    case Variant::kV2:
      if (inputs.synonym_of_v1 == nullptr) return Missing("synonym");
      return Extend(v1, inputs.synonym_of_v1->emissions);
    case Variant::kV3:
    case Variant::kV4: {
      if (inputs.icl_round1 == nullptr) return Missing("icl");
      auto v3 = Extend(v1, WithoutOriginalTexts(inputs.icl_round1->emissions,
                                                *inputs.originals));
      if (variant == Variant::kV3) return v3;
      if (inputs.icl_round2 == nullptr) return Missing("icl round 2");
      return Extend(v3, WithoutOriginalTexts(inputs.icl_round2->emissions,
                                             *inputs.originals));
    }
  }
  return absl::InternalError("unknown variant");
}

}  // namespace mwpaug::pipeline
