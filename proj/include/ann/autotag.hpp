// Copyright 2026 The ann Authors.
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

// Lexicon-based autotagging: a surface form -> tag frequency table built
// from manually annotated text, used to pre-fill suggestions that a human
// then confirms or overrides.

#ifndef ANN_AUTOTAG_HPP_
#define ANN_AUTOTAG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ann/corpus.hpp"
#include "ann/tagset.hpp"

namespace ann {

struct AutotagLexicon {
  // surface form (exact, case-sensitive) -> convention -> count (>= 1)
  std::map<std::string, std::map<std::string, std::size_t>, std::less<>> entries;
  std::string source_note;

  friend bool operator==(const AutotagLexicon&, const AutotagLexicon&) = default;
};

enum class PolicyMode { kUnambiguousOnly, kMostFrequent };

const char* to_string(PolicyMode m);
std::optional<PolicyMode> parse_policy_mode(std::string_view s);

struct AutotagPolicy {
  PolicyMode mode = PolicyMode::kUnambiguousOnly;
  std::size_t min_count = 1;
};

/// Counts manual tags only; auto and suggested tags never feed back into
/// the lexicon. Throws InvalidTagInInput for a tag outside the tagset.
AutotagLexicon build_lexicon(std::span<const Sentence> sentences, const Tagset& tagset);
AutotagLexicon build_lexicon(const Corpus& corpus, const Tagset& tagset);

/// Tag the policy picks for `form`, if any. Only conventions seen at least
/// `min_count` times are candidates. Unambiguous mode needs exactly one
/// candidate; most-frequent mode takes the highest count and breaks ties by
/// the lexicographically smallest convention.
std::optional<std::string> suggest(const AutotagLexicon& lexicon, std::string_view form,
                                   const AutotagPolicy& policy);

/// Re-suggests every token that is not manually tagged and moves a raw
/// sentence to autotagged. Returns the number of tokens carrying a
/// suggestion afterwards. Manual tags are never touched.
std::size_t autotag_sentence(Sentence& sentence, const AutotagLexicon& lexicon,
                             const AutotagPolicy& policy, const Tagset& tagset);
std::size_t autotag_document(Document& doc, const AutotagLexicon& lexicon,
                             const AutotagPolicy& policy, const Tagset& tagset);

/// `surface<TAB>convention<TAB>count`, sorted by surface then convention.
std::string write_lexicon_tsv(const AutotagLexicon& lexicon);
/// Throws ParseError, or UnknownTag (with the line number in the message).
AutotagLexicon read_lexicon_tsv(std::string_view text, const Tagset& tagset);

}  // namespace ann

#endif  // ANN_AUTOTAG_HPP_
