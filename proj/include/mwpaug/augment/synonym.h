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

#ifndef MWPAUG_AUGMENT_SYNONYM_H_
#define MWPAUG_AUGMENT_SYNONYM_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpaug/corpus/record.h"
#include "mwpaug/random.h"

namespace mwpaug::augment {

// Word -> synonyms. Keys and synonyms are lowercase; a word never lists
// itself, and words left with no synonyms have no entry.
struct SynonymLexicon {
  enum class Source { kTsv, kWordnetFiles };

  std::map<std::string, std::vector<std::string>, std::less<>> entries;
  Source source = Source::kTsv;

  // Case-insensitive; nullptr when the word has no entry.
  const std::vector<std::string>* Lookup(std::string_view word) const;
};

// Lines of "word<TAB>syn1,syn2,...". Blank lines are skipped. A line with no
// tab fails with "malformed-line N". Synonyms that could disturb the problem
// text (digits, '?', leading or trailing punctuation) are dropped.
absl::StatusOr<SynonymLexicon> LoadLexiconTsv(
    const std::filesystem::path& path);
absl::StatusOr<SynonymLexicon> ParseLexiconTsv(std::string_view content);

// WordNet 3.0 database directory (index.noun, data.noun, ... in plain-text
// format). A word's synonyms are the other lemmas of the first synset listed
// for it, searching noun, verb, adj, adv in that order. Missing POS files are
// skipped; a directory with none fails.
absl::StatusOr<SynonymLexicon> LoadLexiconWordnet(
    const std::filesystem::path& dir);

// Words never replaced; the other augmenters key on them.
bool IsProtectedWord(std::string_view word);

inline constexpr int kDefaultMaxReplacements = 3;

// Replaces up to `max_replacements` random lexicon words with a random
// synonym, keeping the first letter's case. Numbers, equation and answer are
// untouched. Absent when the text has no replaceable word.
std::optional<corpus::MwpRecord> SynonymReplace(
    const corpus::MwpRecord& record, const SynonymLexicon& lexicon,
    RandomSource& rng, int max_replacements = kDefaultMaxReplacements);

}  // namespace mwpaug::augment

#endif  // MWPAUG_AUGMENT_SYNONYM_H_
