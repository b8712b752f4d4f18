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

#include "mwpaug/augment/question_replace.h"

#include <algorithm>
#include <string>

#include "absl/status/status.h"
#include "mwpaug/augment/text_util.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/mathexpr/rewrite.h"
#include "mwpaug/mathexpr/solver.h"

namespace mwpaug::augment {
namespace {

using mathexpr::BinaryOp;
using mathexpr::Expr;

constexpr size_t kCueLength = 9;  // "how many " and "how much "
constexpr int kMaxFractionDraws = 1000;

}  // namespace

FractionParams DrawFraction(RandomSource& rng) {
  for (int i = 0; i < kMaxFractionDraws; ++i) {
    const auto x = static_cast<int>(rng.UniformInt(1, 10));
    const auto y = static_cast<int>(rng.UniformInt(1, 10));
    if (x != y) return {x, y};
  }
  // Unreachable with any sane source; keeps the x != y contract regardless.
  return {1, 2};
}

std::optional<size_t> FindQuestionCue(std::string_view text) {
  const std::string lower = AsciiLower(text);
  const size_t many = lower.rfind("how many ");
  const size_t much = lower.rfind("how much ");
  if (many == std::string::npos && much == std::string::npos) {
    return std::nullopt;
  }
  if (many == std::string::npos) return much;
  if (much == std::string::npos) return many;
  return std::max(many, much);
}

absl::StatusOr<std::optional<corpus::MwpRecord>> QuestionReplace(
    const corpus::MwpRecord& record, RandomSource& rng, TextFixer& fixer) {
  const auto cue = FindQuestionCue(record.text);
  if (!cue) return std::optional<corpus::MwpRecord>();

  auto eq = mathexpr::ParseEquation(record.equation);
  if (!eq.ok()) return eq.status();
  if (!mathexpr::IsTemplateForm(*eq)) {
    return absl::InvalidArgumentError("template-form: " + record.equation);
  }
  const mathexpr::ExprPtr& body = eq->lhs->is_unknown() ? eq->rhs : eq->lhs;

  const FractionParams f = DrawFraction(rng);
  const std::string fraction = std::to_string(f.x) + "/" + std::to_string(f.y);
  const bool upper = record.text[*cue] == 'H';
  const std::string phrase =
      std::string(upper ? "What" : "what") + " is " + fraction + " of the ";
  const std::string spliced = record.text.substr(0, *cue) + phrase +
                              record.text.substr(*cue + kCueLength);

  // The sentence holding the cue goes through the fixer.
  size_t begin = 0;
  for (size_t i = *cue; i-- > 0;) {
    if (IsSentenceEnd(spliced, i)) {
      begin = i + 1;
      break;
    }
  }
  while (begin < *cue && spliced[begin] == ' ') ++begin;
  size_t end = spliced.size();
  for (size_t i = *cue + phrase.size(); i < spliced.size(); ++i) {
    if (IsSentenceEnd(spliced, i)) {
      end = i + 1;
      break;
    }
  }
  const std::string sentence = spliced.substr(begin, end - begin);
  auto fixed = fixer.Fix(sentence);
  if (!fixed.ok()) return fixed.status();
  const bool keeps_question =
      sentence.back() != '?' ||
      (!fixed->empty() && fixed->back() == '?' &&
       std::count(fixed->begin(), fixed->end(), '?') ==
           std::count(sentence.begin(), sentence.end(), '?'));
  const std::string& chosen =
      keeps_question && NumberValues(*fixed) == NumberValues(sentence)
          ? *fixed
          : sentence;

  mathexpr::Equation scaled{
      Expr::Unknown(),
      Expr::Binary(BinaryOp::kMul, body,
                   Expr::Binary(BinaryOp::kDiv, Expr::Number(f.x),
                                Expr::Number(f.y)))};
  auto answer = mathexpr::Evaluate(*scaled.rhs);
  if (!answer.ok()) return answer.status();

  corpus::MwpRecord out;
  out.id = record.id + ":question_repl";
  out.text = spliced.substr(0, begin) + chosen + spliced.substr(end);
  out.equation = mathexpr::ToString(scaled);
  out.answer = *answer;
  out.provenance = corpus::Provenance::kQuestionRepl;
  out.parent_id = record.id;
  return std::optional<corpus::MwpRecord>(std::move(out));
}

}  // namespace mwpaug::augment
