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

#include "mwpaug/augment/reverse.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "absl/status/status.h"
#include "mwpaug/augment/text_util.h"
#include "mwpaug/corpus/alignment.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/mathexpr/rewrite.h"
#include "mwpaug/mathexpr/solver.h"

namespace mwpaug::augment {
namespace {

bool IsClosing(char c) { return c == '"' || c == '\'' || c == ')'; }

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    const size_t j = std::min(text.find(' ', i), text.size());
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string Join(const std::vector<std::string>& words, size_t begin,
                 size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (!out.empty()) out += ' ';
    out += words[i];
  }
  return out;
}

bool OneOf(std::string_view word, std::initializer_list<std::string_view> set) {
  const std::string lower = AsciiLower(word);
  return std::find(set.begin(), set.end(), lower) != set.end();
}

bool IsWord(std::string_view word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](char c) {
           return std::isalpha(static_cast<unsigned char>(c)) || c == '\'' ||
                  c == '-';
         });
}

// Words that open a noun phrase; the fallback subject is two words long then.
bool IsDeterminer(std::string_view word) {
  return OneOf(word, {"the", "a", "an", "his", "her", "their", "my", "our",
                      "its", "your", "this", "that", "these", "those", "each",
                      "every", "some"});
}

// Subject words that lose their capital when moved mid-sentence.
bool IsFunctionWord(std::string_view word) {
  return IsDeterminer(word) ||
         OneOf(word, {"he", "she", "it", "they", "we", "you", "there"});
}

// Drops the spaces tokenized corpora put before punctuation.
std::string Detokenize(std::string_view text) {
  std::string out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ' ' && i + 1 < text.size()) {
      const char next = text[i + 1];
      const bool digit_follows =
          i + 2 < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[i + 2]));
      if ((next == ',' || next == '.' || next == '?' || next == '!') &&
          !digit_follows) {
        continue;
      }
    }
    out += text[i];
  }
  return out;
}

std::string CapitalizeFirst(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  }
  return text;
}

// Sentence body without its terminator and the spaces before it.
std::string_view StripTerminator(std::string_view sentence) {
  while (!sentence.empty() &&
         (sentence.back() == '.' || sentence.back() == '?' ||
          sentence.back() == '!' || sentence.back() == ' ' ||
          IsClosing(sentence.back()))) {
    sentence.remove_suffix(1);
  }
  return sentence;
}

}  // namespace

absl::StatusOr<SentenceSplit> SplitSentences(std::string_view text) {
  const std::string normalized = corpus::NormalizeWhitespace(text);
  if (std::count(normalized.begin(), normalized.end(), '?') != 1 ||
      normalized.back() != '?') {
    return absl::InvalidArgumentError(
        "no-question: expected exactly one '?', at the end");
  }
  const auto numbers = corpus::ExtractNumbers(normalized);
  SentenceSplit split;
  size_t begin = 0;
  for (size_t i = 0; i < normalized.size(); ++i) {
    if (!IsSentenceEnd(normalized, i)) continue;
    size_t end = i + 1;
    while (end < normalized.size() &&
           (IsClosing(normalized[end]) ||
            (normalized[end] != ' ' && IsSentenceEnd(normalized, end)))) {
      ++end;
    }
    i = end - 1;
    if (end < normalized.size() && normalized[end] != ' ') continue;  // "a.b"
    const std::string sentence = normalized.substr(begin, end - begin);
    if (end == normalized.size()) {
      split.question = sentence;
    } else {
      Statement s{sentence, {}, begin};
      for (size_t t = 0; t < numbers.size(); ++t) {
        if (numbers[t].start >= begin && numbers[t].end <= end) {
          s.number_indices.push_back(static_cast<int>(t));
        }
      }
      split.statements.push_back(std::move(s));
    }
    begin = end + 1;
  }
  return split;
}

std::optional<std::string> QuestionToStatement(std::string_view question,
                                               double answer,
                                               const VerbTable& verbs) {
  const std::string body(StripTerminator(corpus::NormalizeWhitespace(question)));
  const std::string lower = AsciiLower(body);
  size_t cue = lower.find("how many ");
  bool much = false;
  if (cue == std::string::npos) {
    cue = lower.find("how much ");
    much = true;
  }
  if (cue == std::string::npos) return std::nullopt;
  // Only a clause closed by a comma may precede the cue.
  std::string lead = body.substr(0, cue);
  while (!lead.empty() && lead.back() == ' ') lead.pop_back();
  if (!lead.empty() && lead.back() != ',') return std::nullopt;

  const std::vector<std::string> words = Words(body.substr(cue + 9));
  const std::string value = mathexpr::FormatNumber(answer);
  std::string statement;
  for (size_t a = 0; a < words.size(); ++a) {
    const std::string aux = AsciiLower(words[a]);
    const bool do_aux = aux == "does" || aux == "did" || aux == "do";
    const bool be_aux =
        aux == "is" || aux == "are" || aux == "was" || aux == "were";
    if (!do_aux && !be_aux) continue;
    if (a == 0 && !much) return std::nullopt;  // "How many did ..."
    const std::string np = Join(words, 0, a);
    if (be_aux) {
      if (a == 0) return std::nullopt;
      statement = value + " " + np + " " + words[a];
      if (a + 1 < words.size()) statement += " " + Join(words, a + 1, words.size());
      break;
    }
    // Subject runs up to the first known base verb after the auxiliary.
    size_t verb = 0;
    for (size_t j = a + 2; j < words.size(); ++j) {
      if (verbs.IsBase(words[j])) {
        verb = j;
        break;
      }
    }
    if (verb == 0) {
      verb = a + 1 + (a + 1 < words.size() && IsDeterminer(words[a + 1]) ? 2 : 1);
    }
    if (verb >= words.size() || !IsWord(words[verb]) || verb == a + 1) {
      return std::nullopt;
    }
    const std::string base = AsciiLower(words[verb]);
    const std::string inflected = aux == "does"  ? verbs.ThirdPerson(base)
                                  : aux == "did" ? verbs.Past(base)
                                                 : base;
    if (much && AsciiLower(np) == "money") {
      statement = Join(words, a + 1, verb) + " " + inflected + " $" + value;
    } else {
      statement = Join(words, a + 1, verb) + " " + inflected + " " + value;
      if (!np.empty()) statement += " " + np;
    }
    if (verb + 1 < words.size()) {
      statement += " " + Join(words, verb + 1, words.size());
    }
    break;
  }
  if (statement.empty()) return std::nullopt;
  if (!lead.empty()) statement = lead + " " + statement;
  return statement + ".";
}

std::optional<std::string> StatementToQuestion(std::string_view statement,
                                               const corpus::NumberToken& target,
                                               const VerbTable& verbs) {
  if (corpus::ExtractNumbers(statement).size() != 1) return std::nullopt;
  if (statement.find(',') != std::string_view::npos) return std::nullopt;
  if (target.start > 0 && statement[target.start - 1] == '$') {
    return std::nullopt;
  }
  const std::vector<std::string> before =
      Words(statement.substr(0, target.start));
  const std::vector<std::string> after =
      Words(StripTerminator(statement.substr(target.end)));
  if (before.size() < 2 || after.empty() || !IsWord(after.front())) {
    return std::nullopt;
  }
  if (!std::all_of(after.begin(), after.end(), [](const std::string& w) {
        return w.find_first_of("$%") == std::string::npos;
      })) {
    return std::nullopt;
  }
  const std::string& verb_word = before.back();
  std::vector<std::string> subject(before.begin(), before.end() - 1);
  if (OneOf(subject.front(), {"if", "when", "after", "before", "while",
                              "because", "then", "so", "and", "but", "since",
                              "once", "during", "on", "in", "at", "for",
                              "with", "from", "by", "until", "as"})) {
    return std::nullopt;
  }
  const std::string rest = Join(after, 0, after.size());

  if (subject.size() == 1 && OneOf(subject.front(), {"there"}) &&
      OneOf(verb_word, {"is", "are", "was", "were"})) {
    return "How many " + rest + " " + AsciiLower(verb_word) + " there?";
  }
  if (OneOf(verb_word, {"is", "are", "was", "were", "be", "am"})) {
    return std::nullopt;
  }
  const auto match = verbs.Lookup(verb_word);
  if (!match) return std::nullopt;
  if (IsFunctionWord(subject.front())) subject.front() = AsciiLower(subject.front());
  const char* aux = match->form == VerbForm::kPast          ? "did"
                    : match->form == VerbForm::kThirdPerson ? "does"
                                                            : "do";
  return "How many " + rest + " " + aux + " " + Join(subject, 0, subject.size()) +
         " " + match->base + "?";
}

absl::StatusOr<ReverseOutcome> ReverseQuestion(const corpus::MwpRecord& record,
                                               RandomSource& rng,
                                               const ReverseOptions& options,
                                               const VerbTable& verbs) {
  ReverseOutcome outcome;
  auto split = SplitSentences(record.text);
  if (!split.ok()) {
    outcome.skip_reason = "no-question";
    return outcome;
  }
  auto eq = mathexpr::ParseEquation(record.equation);
  if (!eq.ok()) return eq.status();
  if (!mathexpr::IsTemplateForm(*eq)) {
    outcome.skip_reason = "template-form";
    return outcome;
  }
  const auto support =
      QuestionToStatement(split->question, record.answer, verbs);
  if (!support) {
    outcome.skip_reason = "no-question-pattern";
    return outcome;
  }

  const std::string normalized = corpus::NormalizeWhitespace(record.text);
  const auto tokens = corpus::ExtractNumbers(normalized);
  const auto literals = mathexpr::Literals(*eq);
  const auto alignment = corpus::AlignNumbers(tokens, literals);
  std::map<int, int> literal_of;
  for (auto [t, l] : alignment.pairs) literal_of[t] = l;

  std::vector<corpus::MwpRecord> candidates;
  for (size_t i = 0; i < split->statements.size(); ++i) {
    const Statement& s = split->statements[i];
    if (s.number_indices.size() != 1) continue;
    const int t = s.number_indices.front();
    auto literal = literal_of.find(t);
    if (literal == literal_of.end()) continue;
    // Token offsets relative to the sentence.
    corpus::NumberToken local = tokens[t];
    local.start -= s.start;
    local.end -= s.start;
    const auto question = StatementToQuestion(s.text, local, verbs);
    if (!question) continue;
    auto reversed = mathexpr::ReplaceLiteralWithUnknown(*eq, literal->second,
                                                        record.answer);
    if (!reversed.ok()) continue;
    if (!mathexpr::IsConsistent(*reversed, tokens[t].value)) continue;

    std::vector<std::string> parts;
    if (options.support_position == SupportPosition::kPrepend) {
      parts.push_back(*support);
    }
    for (size_t j = 0; j < split->statements.size(); ++j) {
      if (j != i) parts.push_back(split->statements[j].text);
    }
    if (options.support_position == SupportPosition::kAppend) {
      parts.push_back(*support);
    }
    parts.push_back(*question);

    corpus::MwpRecord out;
    out.text = CapitalizeFirst(Detokenize(Join(parts, 0, parts.size())));
    out.equation = mathexpr::ToString(*reversed);
    out.answer = tokens[t].value;
    out.provenance = corpus::Provenance::kReverse;
    out.parent_id = record.id;
    candidates.push_back(std::move(out));
  }
  if (candidates.empty()) {
    outcome.skip_reason = "no-convertible-statement";
    return outcome;
  }
  if (options.emit_all) {
    for (size_t k = 0; k < candidates.size(); ++k) {
      candidates[k].id = record.id + ":reverse." + std::to_string(k);
    }
    outcome.records = std::move(candidates);
  } else {
    const auto pick = static_cast<size_t>(
        rng.UniformInt(0, static_cast<int64_t>(candidates.size()) - 1));
    candidates[pick].id = record.id + ":reverse";
    outcome.records.push_back(std::move(candidates[pick]));
  }
  return outcome;
}

}  // namespace mwpaug::augment
