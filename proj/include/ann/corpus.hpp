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

// Corpus data model: subcorpora, documents, sentences and tokens, plus the
// pure operations on them (tokenization, ingestion, statistics, tagging).
// The thread-safe container lives in store.hpp.

#ifndef ANN_CORPUS_HPP_
#define ANN_CORPUS_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ann/tagset.hpp"

namespace ann {

// -- subcorpus taxonomy ---------------------------------------------------

enum class Mode { kIndirectWritten, kDirectWritten, kSpoken };
enum class Source { kMagazine, kBook };
enum class Genre { kProse, kDrama, kPoetry, kNonfiction };
enum class Channel { kCmcSynchronous, kCmcAsynchronous, kNonCmcPersonal, kNonCmcPublic };
enum class Domain { kPersonal, kPublic };

const char* to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

/// Position of a document in the corpus taxonomy, e.g.
/// "indirect_written/magazine/prose", "direct_written/cmc_asynchronous",
/// "spoken/personal". Only combinations legal under their mode can be built.
class SubcorpusPath {
 public:
  struct Written {
    Source source;
    Genre genre;
    friend auto operator<=>(const Written&, const Written&) = default;
  };

  static SubcorpusPath indirect_written(Source source, Genre genre);
  static SubcorpusPath direct_written(Channel channel);
  static SubcorpusPath spoken(Domain domain);
  /// Throws InvalidValue("subcorpus", ...) for anything not in the taxonomy.
  static SubcorpusPath parse(std::string_view path);
  /// All 14 leaf branches, in taxonomy order.
  static std::vector<SubcorpusPath> all();

  Mode mode() const { return mode_; }
  std::optional<Written> written() const;
  std::optional<Channel> channel() const;
  std::optional<Domain> domain() const;

  std::string str() const;
  /// The part below the mode, joined with '-' ("magazine-prose", "personal").
  std::string branch_name() const;

  friend bool operator==(const SubcorpusPath&, const SubcorpusPath&) = default;
  friend std::strong_ordering operator<=>(const SubcorpusPath& a, const SubcorpusPath& b) {
    return a.str() <=> b.str();
  }

 private:
  SubcorpusPath(Mode m, std::variant<Written, Channel, Domain> b) : mode_(m), branch_(b) {}

  Mode mode_;
  std::variant<Written, Channel, Domain> branch_;
};

// -- text units -----------------------------------------------------------

/// Byte offsets [begin, end) into the sentence text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  std::optional<TagAssignment> tag;
  Span span;

  bool is_manual() const { return tag && tag->provenance == Provenance::kManual; }
  bool is_suggestion() const { return tag && tag->provenance != Provenance::kManual; }

  friend bool operator==(const Token&, const Token&) = default;
};

enum class SentenceStatus { kRaw, kAutotagged, kInProgress, kComplete };

const char* to_string(SentenceStatus s);
std::optional<SentenceStatus> parse_status(std::string_view s);

struct Sentence {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  SentenceStatus status = SentenceStatus::kRaw;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string doc_id;
  SubcorpusPath subcorpus = SubcorpusPath::spoken(Domain::kPersonal);
  std::vector<Sentence> sentences;
  std::string metadata_ref;

  std::size_t token_count() const;
  friend bool operator==(const Document&, const Document&) = default;
};

/// A plain value snapshot of a corpus; documents ordered by doc_id.
struct Corpus {
  std::vector<Document> documents;

  const Document* find(std::string_view doc_id) const;
  const Sentence* find_sentence(std::string_view sentence_id) const;
};

// -- tokenization and ingestion -------------------------------------------

/// Splits on Unicode whitespace; every maximal run of punctuation becomes its
/// own token. Throws EncodingError on invalid UTF-8.
std::vector<Token> tokenize(std::string_view text);

/// True iff every token surface equals its span in `text` and everything
/// between spans is whitespace, i.e. the text can be rebuilt from the tokens.
bool reconstructs(std::string_view text, const std::vector<Token>& tokens);
/// Rebuilds sentence text from token surfaces and the gaps between spans.
std::string detokenize(std::string_view text, const std::vector<Token>& tokens);

enum class SplitMode {
  kNewline,  // one sentence per non-blank line
  kDanda,    // sentences end after a run of danda / double danda
};

struct SentenceSplitter {
  SplitMode mode = SplitMode::kNewline;
};

std::vector<std::string> split_sentences(std::string_view raw, SentenceSplitter splitter = {});

/// `<doc_id>.<ordinal>`, ordinal zero-padded to 4 digits and starting at 1.
std::string make_sentence_id(std::string_view doc_id, std::size_t ordinal);

/// Document ids become file names: non-empty, no whitespace, no path
/// separators, no leading dot.
bool is_valid_doc_id(std::string_view doc_id);

/// Builds a document from raw text without registering it anywhere. Throws
/// EncodingError with the byte offset into `raw`.
Document make_document(std::string_view raw, std::string doc_id, const SubcorpusPath& subcorpus,
                       SentenceSplitter splitter = {});

// -- statistics -----------------------------------------------------------

struct Counts {
  std::size_t words = 0;
  std::size_t sentences = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

struct CorpusStats {
  std::size_t word_count = 0;
  std::size_t sentence_count = 0;
  std::map<Mode, Counts> by_mode;

  CorpusStats& operator+=(const CorpusStats& other);
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

/// Punctuation tokens (tagged RD__PUNC, or made only of punctuation) are not words.
bool is_word_token(const Token& token);
CorpusStats compute_stats(const Document& doc);
CorpusStats compute_stats(const Corpus& corpus);

// -- tagging --------------------------------------------------------------

/// Sets a token tag and advances the sentence status: raw/autotagged become
/// in_progress, and a sentence whose tokens are all manually tagged becomes
/// complete. Throws IndexOutOfRange.
void apply_tag(Sentence& sentence, std::size_t index, TagAssignment tag);
/// Turns an auto/suggested tag into a manual one. Throws NoSuggestion.
void confirm_token(Sentence& sentence, std::size_t index);
/// Confirms every pending suggestion; returns how many were confirmed.
std::size_t confirm_all(Sentence& sentence);
/// Drops a pending suggestion from one token. Manual tags are kept.
void clear_suggestion(Sentence& sentence, std::size_t index);
/// The explicit reset: drops every tag and returns the sentence to raw.
void clear_tags(Sentence& sentence);

/// Aggregate status of a document's sentences.
SentenceStatus document_status(const Document& doc);

}  // namespace ann

#endif  // ANN_CORPUS_HPP_
