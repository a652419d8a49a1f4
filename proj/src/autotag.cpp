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

#include "ann/autotag.hpp"

#include <charconv>

#include "ann/error.hpp"
#include "ann/text.hpp"

namespace ann {

const char* to_string(PolicyMode m) {
  return m == PolicyMode::kMostFrequent ? "most_frequent" : "unambiguous_only";
}

std::optional<PolicyMode> parse_policy_mode(std::string_view s) {
  if (s == "unambiguous_only") return PolicyMode::kUnambiguousOnly;
  if (s == "most_frequent") return PolicyMode::kMostFrequent;
  return std::nullopt;
}

namespace {

void count_sentence(AutotagLexicon& lex, const Sentence& s, const Tagset& tagset) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const Token& t = s.tokens[i];
    if (!t.is_manual()) continue;
    if (!tagset.find_convention(t.tag->convention)) throw InvalidTagInInput(s.id, i);
    ++lex.entries[t.surface][t.tag->convention];
  }
}

}  // namespace

AutotagLexicon build_lexicon(std::span<const Sentence> sentences, const Tagset& tagset) {
  AutotagLexicon lex;
  lex.source_note = "built from manual annotations";
  for (const auto& s : sentences) count_sentence(lex, s, tagset);
  return lex;
}

AutotagLexicon build_lexicon(const Corpus& corpus, const Tagset& tagset) {
  AutotagLexicon lex;
  lex.source_note = "built from manual annotations";
  for (const auto& d : corpus.documents)
    for (const auto& s : d.sentences) count_sentence(lex, s, tagset);
  return lex;
}

std::optional<std::string> suggest(const AutotagLexicon& lexicon, std::string_view form,
                                   const AutotagPolicy& policy) {
  auto it = lexicon.entries.find(form);
  if (it == lexicon.entries.end()) return std::nullopt;

  const std::string* best = nullptr;
  std::size_t best_count = 0;
  std::size_t candidates = 0;
  // The map iterates conventions in ascending order, so a strict '>' keeps
  // the smallest convention on ties.
  for (const auto& [convention, count] : it->second) {
    if (count < policy.min_count) continue;
    ++candidates;
    if (!best || count > best_count) {
      best = &convention;
      best_count = count;
    }
  }
  if (!best) return std::nullopt;
  if (policy.mode == PolicyMode::kUnambiguousOnly && candidates != 1) return std::nullopt;
  return *best;
}

std::size_t autotag_sentence(Sentence& sentence, const AutotagLexicon& lexicon,
                             const AutotagPolicy& policy, const Tagset& tagset) {
  std::size_t suggested = 0;
  for (auto& t : sentence.tokens) {
    if (t.is_manual()) continue;
    auto tag = suggest(lexicon, t.surface, policy);
    if (tag && tagset.find_convention(*tag)) {
      t.tag = tagset.assign(*tag, Provenance::kAuto);
      ++suggested;
    } else {
      t.tag.reset();
    }
  }
  if (sentence.status == SentenceStatus::kRaw) sentence.status = SentenceStatus::kAutotagged;
  return suggested;
}

std::size_t autotag_document(Document& doc, const AutotagLexicon& lexicon,
                             const AutotagPolicy& policy, const Tagset& tagset) {
  std::size_t n = 0;
  for (auto& s : doc.sentences) n += autotag_sentence(s, lexicon, policy, tagset);
  return n;
}

std::string write_lexicon_tsv(const AutotagLexicon& lexicon) {
  std::string out;
  for (const auto& [surface, tags] : lexicon.entries)
    for (const auto& [convention, count] : tags) {
      out += surface;
      out += '\t';
      out += convention;
      out += '\t';
      out += std::to_string(count);
      out += '\n';
    }
  return out;
}

AutotagLexicon read_lexicon_tsv(std::string_view text, const Tagset& tagset) {
  validate_utf8(text);
  AutotagLexicon lex;
  lex.source_note = "read from lexicon file";
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) throw ParseError(line_no, "expected surface<TAB>convention<TAB>count");
    if (cols[0].empty() || contains_space(cols[0])) throw ParseError(line_no, "bad surface form");
    if (!tagset.find_convention(cols[1]))
      throw UnknownTag(std::string(cols[1]), line_no);
    std::size_t count = 0;
    auto [p, ec] = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), count);
    if (ec != std::errc() || p != cols[2].data() + cols[2].size() || count == 0)
      throw ParseError(line_no, "count must be a positive integer");
    auto& slot = lex.entries[std::string(cols[0])][std::string(cols[1])];
    if (slot != 0) throw ParseError(line_no, "duplicate entry");
    slot = count;
  }
  return lex;
}

}  // namespace ann
