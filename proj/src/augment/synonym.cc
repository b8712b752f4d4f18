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

#include "mwpaug/augment/synonym.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/corpus/numbers.h"

namespace mwpaug::augment {
namespace {

bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Letters, with inner spaces, hyphens and apostrophes. Anything else could
// create or split a number token or add a question mark.
bool IsSafeSynonym(std::string_view s) {
  if (s.empty() || !IsAlpha(s.front()) || !IsAlpha(s.back())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return IsAlpha(c) || c == ' ' || c == '-' || c == '\'';
  });
}

// Adds cleaned synonyms for `word`, keeping first-seen order.
void AddEntry(SynonymLexicon& lexicon, std::string_view word,
              const std::vector<std::string>& raw) {
  const std::string key = Lower(Trim(word));
  if (key.empty()) return;
  std::vector<std::string>& list = lexicon.entries[key];
  for (const std::string& r : raw) {
    std::string syn = Lower(Trim(r));
    if (syn == key || !IsSafeSynonym(syn)) continue;
    if (std::find(list.begin(), list.end(), syn) == list.end()) {
      list.push_back(std::move(syn));
    }
  }
  if (list.empty()) lexicon.entries.erase(key);
}

}  // namespace

const std::vector<std::string>* SynonymLexicon::Lookup(
    std::string_view word) const {
  auto it = entries.find(Lower(word));
  return it == entries.end() ? nullptr : &it->second;
}

absl::StatusOr<SynonymLexicon> ParseLexiconTsv(std::string_view content) {
  SynonymLexicon lexicon;
  lexicon.source = SynonymLexicon::Source::kTsv;
  int line_no = 0;
  while (!content.empty()) {
    const size_t nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    content.remove_prefix(nl == std::string_view::npos ? content.size()
                                                        : nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || Trim(line.substr(0, tab)).empty()) {
      return absl::InvalidArgumentError("malformed-line " +
                                        std::to_string(line_no));
    }
    std::vector<std::string> syns;
    std::string_view rest = line.substr(tab + 1);
    while (true) {
      const size_t comma = rest.find(',');
      syns.emplace_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    AddEntry(lexicon, line.substr(0, tab), syns);
  }
  return lexicon;
}

absl::StatusOr<SynonymLexicon> LoadLexiconTsv(
    const std::filesystem::path& path) {
  auto content = corpus::ReadFile(path);
  if (!content.ok()) return content.status();
  return ParseLexiconTsv(*content);
}

namespace {

absl::Status FormatError(const std::filesystem::path& file,
                         const std::string& what) {
  return absl::DataLossError("format-error: " + file.filename().string() +
                             ": " + what);
}

// Lemmas of the data line starting at `offset`.
absl::StatusOr<std::vector<std::string>> SynsetLemmas(
    const std::string& data, const std::filesystem::path& file,
    uint64_t offset) {
  if (offset >= data.size()) {
    return FormatError(file, "offset " + std::to_string(offset) +
                                 " past end of file");
  }
  const size_t eol = data.find('\n', offset);
  std::istringstream line(data.substr(offset, eol - offset));
  std::string synset_offset, lex_filenum, ss_type, w_cnt_hex;
  line >> synset_offset >> lex_filenum >> ss_type >> w_cnt_hex;
  uint64_t found = 0;
  const auto [ptr, ec] = std::from_chars(
      synset_offset.data(), synset_offset.data() + synset_offset.size(), found);
  if (!line || ec != std::errc() || found != offset) {
    return FormatError(file, "no synset at offset " + std::to_string(offset));
  }
  int w_cnt = 0;
  try {
    w_cnt = std::stoi(w_cnt_hex, nullptr, 16);
  } catch (const std::exception&) {
    return FormatError(file, "bad word count at offset " +
                                 std::to_string(offset));
  }
  std::vector<std::string> lemmas;
  for (int i = 0; i < w_cnt; ++i) {
    std::string word, lex_id;
    if (!(line >> word >> lex_id)) {
      return FormatError(file, "short synset at offset " +
                                   std::to_string(offset));
    }
    // Adjective syntactic markers: "galore(ip)".
    if (const size_t paren = word.find('('); paren != std::string::npos) {
      word.erase(paren);
    }
    std::replace(word.begin(), word.end(), '_', ' ');
    lemmas.push_back(word);
  }
  return lemmas;
}

}  // namespace

absl::StatusOr<SynonymLexicon> LoadLexiconWordnet(
    const std::filesystem::path& dir) {
  SynonymLexicon lexicon;
  lexicon.source = SynonymLexicon::Source::kWordnetFiles;
  std::set<std::string, std::less<>> seen;
  int pos_files = 0;
  for (const char* pos : {"noun", "verb", "adj", "adv"}) {
    const auto index_path = dir / (std::string("index.") + pos);
    const auto data_path = dir / (std::string("data.") + pos);
    if (!std::filesystem::exists(index_path)) continue;
    auto index = corpus::ReadFile(index_path);
    if (!index.ok()) return index.status();
    auto data = corpus::ReadFile(data_path);
    if (!data.ok()) return data.status();
    ++pos_files;

    std::istringstream lines(*index);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == ' ') continue;  // license header
      std::istringstream fields(line);
      std::string lemma, pos_tag;
      int synset_cnt = 0, p_cnt = 0;
      fields >> lemma >> pos_tag >> synset_cnt >> p_cnt;
      if (!fields || synset_cnt < 1) {
        return FormatError(index_path, "bad index line for '" + lemma + "'");
      }
      std::string skip;
      for (int i = 0; i < p_cnt; ++i) fields >> skip;
      int sense_cnt = 0, tagsense_cnt = 0;
      uint64_t first_offset = 0;
      fields >> sense_cnt >> tagsense_cnt >> first_offset;
      if (!fields) {
        return FormatError(index_path, "bad index line for '" + lemma + "'");
      }
      // Only single words can match a text token; the first POS wins.
      if (!std::all_of(lemma.begin(), lemma.end(), IsAlpha)) continue;
      if (!seen.insert(lemma).second) continue;
      auto lemmas = SynsetLemmas(*data, data_path, first_offset);
      if (!lemmas.ok()) return lemmas.status();
      AddEntry(lexicon, lemma, *lemmas);
    }
  }
  if (pos_files == 0) {
    return absl::NotFoundError("io-failure: no WordNet index files in " +
                               dir.string());
  }
  return lexicon;
}

bool IsProtectedWord(std::string_view word) {
  static constexpr std::array<std::string_view, 10> kProtected = {
      "how", "many", "much", "what", "is", "of", "did", "does", "do", "x"};
  const std::string lower = Lower(word);
  return std::find(kProtected.begin(), kProtected.end(), lower) !=
         kProtected.end();
}

std::optional<corpus::MwpRecord> SynonymReplace(
    const corpus::MwpRecord& record, const SynonymLexicon& lexicon,
    RandomSource& rng, int max_replacements) {
  const auto numbers = corpus::ExtractNumbers(record.text);
  auto inside_number = [&](size_t begin, size_t end) {
    return std::any_of(numbers.begin(), numbers.end(), [&](const auto& t) {
      return begin < t.end && t.start < end;
    });
  };

  struct Candidate {
    size_t start, end;
    const std::vector<std::string>* synonyms;
  };
  std::vector<Candidate> candidates;
  const std::string& text = record.text;
  for (size_t i = 0; i < text.size();) {
    if (!IsAlpha(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsAlpha(text[j])) ++j;
    const std::string_view word(text.data() + i, j - i);
    if (!IsProtectedWord(word) && !inside_number(i, j)) {
      if (const auto* syns = lexicon.Lookup(word)) {
        candidates.push_back({i, j, syns});
      }
    }
    i = j;
  }
  if (candidates.empty() || max_replacements < 1) return std::nullopt;

  // Partial Fisher-Yates picks k distinct positions.
  const size_t n = candidates.size();
  const size_t k = std::min(n, static_cast<size_t>(max_replacements));
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  for (size_t i = 0; i < k; ++i) {
    const auto j = static_cast<size_t>(
        rng.UniformInt(static_cast<int64_t>(i), static_cast<int64_t>(n - 1)));
    std::swap(order[i], order[j]);
  }
  std::vector<size_t> chosen(order.begin(), order.begin() + k);
  std::sort(chosen.begin(), chosen.end());

  std::vector<std::string> replacements;
  for (size_t c : chosen) {
    const auto& syns = *candidates[c].synonyms;
    std::string syn = syns[static_cast<size_t>(
        rng.UniformInt(0, static_cast<int64_t>(syns.size()) - 1))];
    if (std::isupper(static_cast<unsigned char>(text[candidates[c].start]))) {
      syn[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(syn[0])));
    }
    replacements.push_back(std::move(syn));
  }

  corpus::MwpRecord out = record;
  for (size_t i = chosen.size(); i-- > 0;) {
    const Candidate& c = candidates[chosen[i]];
    out.text.replace(c.start, c.end - c.start, replacements[i]);
  }
  out.id = record.id + ":synonym";
  out.provenance = corpus::Provenance::kSynonym;
  out.parent_id = record.id;
  return out;
}

}  // namespace mwpaug::augment
