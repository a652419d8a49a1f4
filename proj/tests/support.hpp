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

// Random fixture generators and brute-force oracles shared by the unit and
// acceptance suites. Nothing here calls into the code paths it checks.

#ifndef ANN_TESTS_SUPPORT_HPP_
#define ANN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ann/corpus.hpp"
#include "ann/metadata.hpp"
#include "ann/tagset.hpp"

namespace ann::testing {

inline const std::vector<std::string>& sample_words() {
  static const std::vector<std::string> words{
      "həm", "go",   "je",      "du",    "ek",     "igarəh", "ʈʰo", "əre",  "ke",    "me",
      "pər", "tə",   "bʰi:",    "nə",    "kucʰ",   "goṭbo",  "həi", "jəun", "kekra", "u",
      "i",   "मगही", "भाषा",     "कहानी", "ghora",  "son-ma", "A&B", "<x>",  "q\"t",  "l'o"};
  return words;
}

inline const std::vector<std::string>& sample_punct() {
  static const std::vector<std::string> punct{"!", "?", ",", "।", "॥", "...", "\"", "-", "#"};
  return punct;
}

/// A sentence text built from random words and punctuation, with random
/// single/double spaces and tabs between tokens.
inline std::string random_text(std::mt19937& rng, std::size_t max_tokens = 8) {
  std::uniform_int_distribution<std::size_t> ntok(1, max_tokens);
  std::uniform_int_distribution<std::size_t> wpick(0, sample_words().size() - 1);
  std::uniform_int_distribution<std::size_t> ppick(0, sample_punct().size() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  std::string text;
  std::size_t n = ntok(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      int c = coin(rng);
      text += c < 7 ? " " : c < 9 ? "  " : "\t";
    }
    text += sample_words()[wpick(rng)];
    if (coin(rng) < 2) text += sample_punct()[ppick(rng)];
  }
  return text;
}

/// Random tagging: each token untagged, or tagged with a random node of the
/// tagset under a random provenance.
inline void random_tags(std::mt19937& rng, const Tagset& tagset, Sentence& s) {
  auto nodes = tagset.nodes();
  std::uniform_int_distribution<std::size_t> npick(0, nodes.size() - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  for (auto& t : s.tokens) {
    int c = coin(rng);
    if (c == 0) continue;
    const TagNode& n = nodes[npick(rng)];
    Provenance p = c == 1 ? Provenance::kManual : c == 2 ? Provenance::kAuto : Provenance::kSuggested;
    t.tag = TagAssignment{n.convention, n.label, p, n.children.empty()};
  }
  std::uniform_int_distribution<int> st(0, 3);
  s.status = static_cast<SentenceStatus>(st(rng));
}

inline SubcorpusPath random_path(std::mt19937& rng) {
  auto all = SubcorpusPath::all();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

/// A document of `n_sentences` whose tokens come from ann::tokenize (the
/// tokenizer has its own tests) and carry random tags.
inline Document random_document(std::mt19937& rng, const Tagset& tagset, const std::string& doc_id,
                                std::size_t n_sentences) {
  Document doc;
  doc.doc_id = doc_id;
  doc.subcorpus = random_path(rng);
  for (std::size_t i = 1; i <= n_sentences; ++i) {
    Sentence s;
    s.id = make_sentence_id(doc_id, i);
    s.text = random_text(rng);
    s.tokens = tokenize(s.text);
    random_tags(rng, tagset, s);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

inline nlohmann::json participants_fixture() {
  return nlohmann::json::array({{{"pseudonym", "P1"}, {"role", "speaker"}, {"age_band", "30-40"}},
                                {{"pseudonym", "P2"}, {"role", "listener"}, {"gender", "f"}}});
}

/// Complete field maps per record kind.
inline nlohmann::json written_fields() {
  return {{"title", "Folktale of the crow"}, {"author", "S. Prasad"}, {"publication", "Magadhbhumi"},
          {"publication_date", "2010-05-01"}, {"page_range", "12-14"}, {"entry_date", "2011-01-15"},
          {"entered_by", "A. Devi"}};
}

inline nlohmann::json cmc_async_fields() {
  return {{"channel", "cmc_asynchronous"}, {"source_name", "Magahi blog"}, {"writer", "M. Singh"},
          {"posted_date", "2011-02-03"}, {"entry_date", "2011-03-01"},
          {"url", "http://example.org/magahi/post-1"}};
}

inline nlohmann::json cmc_sync_fields() {
  return {{"channel", "cmc_synchronous"}, {"posted_date", "2011-02-03"},
          {"participants", participants_fixture()}};
}

inline nlohmann::json recording_fields() {
  return {{"record_date", "2011-04-02"},
          {"record_time", "18:30"},
          {"place", "Gaya"},
          {"recorded_by", "S. Prasad"},
          {"original_format", "WAV"},
          {"original_encoding", "PCM 16-bit 44.1kHz"},
          {"current_format", "FLAC"},
          {"current_encoding", "FLAC level 5"},
          {"device", "Zoom H4n"},
          {"context_description", "Evening conversation at home"},
          {"duration_seconds", 1830.5},
          {"transfer_software", "Audacity"},
          {"participants", participants_fixture()},
          {"bystanders", nlohmann::json::array({{{"pseudonym", "B1"}, {"role", "child"}}})}};
}

inline nlohmann::json descriptive_fields(const SubcorpusPath& path) {
  return {{"subcorpus", path.str()},
          {"summary", "Texts of " + path.str()},
          {"structure_note", "One TSV file per source"},
          {"access_software_note", "Any UTF-8 text editor"}};
}

/// Fields for the cataloguing record a document of `path` needs.
inline std::pair<RecordKind, nlohmann::json> catalog_fields_for(const SubcorpusPath& path) {
  switch (path.mode()) {
    case Mode::kIndirectWritten:
      return {RecordKind::kWritten, written_fields()};
    case Mode::kDirectWritten: {
      nlohmann::json f = *path.channel() == Channel::kCmcAsynchronous ? cmc_async_fields() : cmc_sync_fields();
      f["channel"] = path.branch_name();
      return {RecordKind::kCmc, f};
    }
    case Mode::kSpoken:
      return {RecordKind::kRecording, recording_fields()};
  }
  return {RecordKind::kWritten, written_fields()};
}

/// Gives every document a matching cataloguing record listing its sentence
/// ids, and every branch one descriptive record.
inline Catalog catalogue(Corpus& corpus) {
  Catalog catalog;
  std::vector<SubcorpusPath> branches;
  for (auto& doc : corpus.documents) {
    auto [kind, fields] = catalog_fields_for(doc.subcorpus);
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& s : doc.sentences) ids.push_back(s.id);
    fields["sentence_ids"] = ids;
    doc.metadata_ref = catalog.create(kind, fields).id;
    if (std::find(branches.begin(), branches.end(), doc.subcorpus) == branches.end())
      branches.push_back(doc.subcorpus);
  }
  for (const auto& b : branches) {
    auto fields = descriptive_fields(b);
    fields["themes"] = nlohmann::json::object();
    for (const auto& doc : corpus.documents)
      if (doc.subcorpus == b) fields["themes"][doc.doc_id] = "theme of " + doc.doc_id;
    catalog.create(RecordKind::kDescriptive, fields);
  }
  return catalog;
}

// -- autotag oracles ------------------------------------------------------

// Required-field inventories, written out independently of the library.
inline const std::vector<std::string> kWrittenRequired = {"title",            "author",     "publication",
                                                   "publication_date", "entry_date", "entered_by"};
inline const std::vector<std::string> kCmcAsyncRequired = {"source_name", "writer", "posted_date", "entry_date", "url"};
inline const std::vector<std::string> kCmcSyncRequired = {"posted_date", "participants"};
inline const std::vector<std::string> kRecordingRequired = {
    "record_date",       "record_time",    "place",            "recorded_by",
    "original_format",   "original_encoding", "current_format", "current_encoding",
    "device",            "context_description", "duration_seconds", "participants"};

// Sentences over a small vocabulary ("f0", "f1", ...) so forms repeat; most
// tokens carry a manual or automatic tag from a fixed pool.
inline std::vector<Sentence> random_annotated(std::mt19937& rng, std::size_t max_tokens, std::size_t forms) {
  const Tagset& tagset = Tagset::magahi();
  const std::vector<std::string> tags = {"RP__CL", "QT__QTC", "PR__PRL", "DM__DMR", "N__NN", "V__VM__VF", "PSP"};
  std::vector<Sentence> out;
  std::size_t budget = 1 + rng() % max_tokens;
  std::size_t sid = 0;
  while (budget > 0) {
    std::size_t n = std::min<std::size_t>(budget, 1 + rng() % 12);
    budget -= n;
    Sentence s;
    s.id = "d." + std::to_string(++sid);
    for (std::size_t i = 0; i < n; ++i) s.text += (i ? " f" : "f") + std::to_string(rng() % forms);
    s.tokens = tokenize(s.text);
    for (auto& t : s.tokens) {
      int c = static_cast<int>(rng() % 4);
      if (c == 0) continue;
      Provenance p = c == 3 ? Provenance::kAuto : Provenance::kManual;
      t.tag = tagset.assign(tags[rng() % tags.size()], p);
    }
    out.push_back(std::move(s));
  }
  return out;
}

using FlatLexicon = std::map<std::string, std::map<std::string, std::size_t>>;

/// Recount by scanning every (surface, tag) pair against every token.
inline FlatLexicon brute_force_lexicon(const std::vector<Sentence>& sentences) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& s : sentences)
    for (const auto& t : s.tokens)
      if (t.tag && t.tag->provenance == Provenance::kManual) pairs.emplace_back(t.surface, t.tag->convention);
  FlatLexicon out;
  for (const auto& p : pairs) {
    std::size_t n = 0;
    for (const auto& s : sentences)
      for (const auto& t : s.tokens)
        if (t.tag && t.tag->provenance == Provenance::kManual && t.surface == p.first &&
            t.tag->convention == p.second)
          ++n;
    out[p.first][p.second] = n;
  }
  return out;
}

/// Argmax over a copied candidate list sorted by (count desc, convention asc).
inline std::optional<std::string> brute_force_most_frequent(const std::map<std::string, std::size_t>& counts,
                                                            std::size_t min_count) {
  std::vector<std::pair<std::string, std::size_t>> v;
  for (const auto& [tag, n] : counts)
    if (n >= min_count) v.emplace_back(tag, n);
  if (v.empty()) return std::nullopt;
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return v.front().first;
}

}  // namespace ann::testing

#endif  // ANN_TESTS_SUPPORT_HPP_
