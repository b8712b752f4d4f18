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

#include "mwpaug/augment/icl.h"

#include <cmath>
#include <map>
#include <vector>

#include "mwpaug/corpus/alignment.h"
#include "mwpaug/corpus/numbers.h"
#include "mwpaug/mathexpr/parser.h"
#include "mwpaug/mathexpr/render.h"
#include "mwpaug/mathexpr/rewrite.h"
#include "mwpaug/mathexpr/solver.h"

namespace mwpaug::augment {
namespace {

constexpr int kMaxDistinctDraws = 1000;

double RoundTo(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

std::string Trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

absl::Status ValidatePolicy(const NumericModPolicy& policy) {
  if (policy.int_low >= policy.int_high) {
    return absl::InvalidArgumentError("policy: int range needs low < high");
  }
  if (!(policy.float_low < policy.float_high)) {
    return absl::InvalidArgumentError("policy: float range needs low < high");
  }
  if (policy.float_decimals < 1 || policy.float_decimals > 6) {
    return absl::InvalidArgumentError("policy: float decimals must be 1..6");
  }
  if (policy.max_retries < 1) {
    return absl::InvalidArgumentError("policy: max_retries must be >= 1");
  }
  return absl::OkStatus();
}

ModifiedProblem ModifyNumbers(std::string_view text,
                              const mathexpr::Equation& equation,
                              double answer, RandomSource& rng,
                              const NumericModPolicy& policy) {
  ModifiedProblem unchanged{std::string(text), equation, answer, false};
  const auto tokens = corpus::ExtractNumbers(text);
  if (tokens.empty()) return unchanged;
  const auto alignment =
      corpus::AlignNumbers(tokens, mathexpr::Literals(equation));

  for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
    std::vector<double> values;
    bool distinct = true;
    for (const auto& token : tokens) {
      double v = 0;
      int tries = 0;
      do {
        if (++tries > kMaxDistinctDraws) {
          distinct = false;
          break;
        }
        v = token.kind == corpus::NumberKind::kInteger
                ? static_cast<double>(rng.UniformInt(policy.int_low,
                                                     policy.int_high))
                : RoundTo(rng.UniformReal(policy.float_low, policy.float_high),
                          policy.float_decimals);
      } while (std::find(values.begin(), values.end(), v) != values.end());
      if (!distinct) break;
      values.push_back(v);
    }
    if (!distinct) continue;

    std::map<int, double> replacements;
    for (auto [t, l] : alignment.pairs) replacements[l] = values[t];
    auto new_eq = mathexpr::SubstituteLiterals(equation, replacements);
    if (!new_eq.ok()) return unchanged;
    auto solved = mathexpr::Solve(*new_eq);
    if (!solved.ok() || !std::isfinite(*solved)) continue;
    if (*solved < 0 && answer >= 0) continue;

    std::string new_text(text);
    for (size_t t = tokens.size(); t-- > 0;) {
      new_text.replace(tokens[t].start, tokens[t].end - tokens[t].start,
                       corpus::FormatSurface(values[t], tokens[t].kind,
                                             policy.float_decimals));
    }
    return {std::move(new_text), *std::move(new_eq), *solved, true};
  }
  return unchanged;
}

absl::StatusOr<IclOutcome> IclRephrase(const corpus::MwpRecord& record,
                                       const llm::PromptTemplate& prompt,
                                       llm::CompletionClient& client,
                                       RandomSource& rng,
                                       const NumericModPolicy& policy,
                                       int round) {
  auto completion = client.Complete(llm::RenderPrompt(prompt, record.text),
                                    prompt.stop_marker);
  if (!completion.ok()) return completion.status();

  IclOutcome outcome;
  const std::string rephrased = Trim(*completion);
  if (rephrased.empty()) {
    outcome.skip_reason = "empty";
    return outcome;
  }
  if (rephrased.find('?') == std::string::npos) {
    outcome.skip_reason = "no-question-mark";
    return outcome;
  }
  if (rephrased == record.text || rephrased == Trim(record.text)) {
    outcome.skip_reason = "identical";
    return outcome;
  }

  auto equation = mathexpr::ParseEquation(record.equation);
  if (!equation.ok()) return equation.status();
  const auto literals = mathexpr::Literals(*equation);
  const size_t original_pairs =
      corpus::AlignNumbers(corpus::ExtractNumbers(record.text), literals)
          .pairs.size();
  const auto alignment =
      corpus::AlignNumbers(corpus::ExtractNumbers(rephrased), literals);
  if (alignment.pairs.size() < original_pairs ||
      corpus::HasUnsupportedNumberFormat(rephrased)) {
    outcome.skip_reason = "alignment-failure";
    return outcome;
  }

  corpus::MwpRecord out;
  out.id = record.id + (round == 2 ? ":icl2" : ":icl");
  out.provenance =
      round == 2 ? corpus::Provenance::kIclRound2 : corpus::Provenance::kIcl;
  out.parent_id = record.id;
  out.text = rephrased;
  out.equation = record.equation;
  out.answer = record.answer;
  if (!alignment.pairs.empty()) {
    const ModifiedProblem modified =
        ModifyNumbers(rephrased, *equation, record.answer, rng, policy);
    if (modified.modified) {
      out.text = modified.text;
      out.equation = mathexpr::ToString(modified.equation);
      out.answer = modified.answer;
    } else {
      outcome.note = "numeric-modification-exhausted";
    }
  } else {
    outcome.note = "no-aligned-numbers";
  }
  outcome.record = std::move(out);
  return outcome;
}

}  // namespace mwpaug::augment
