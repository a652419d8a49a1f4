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

#include "ann/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "ann/error.hpp"
#include "ann/text.hpp"

namespace ann {

namespace {

constexpr std::array<std::pair<Mode, const char*>, 3> kModes{{
    {Mode::kIndirectWritten, "indirect_written"},
    {Mode::kDirectWritten, "direct_written"},
    {Mode::kSpoken, "spoken"},
}};
constexpr std::array<const char*, 2> kSources{"magazine", "book"};
constexpr std::array<const char*, 4> kGenres{"prose", "drama", "poetry", "nonfiction"};
constexpr std::array<const char*, 4> kChannels{"cmc_synchronous", "cmc_asynchronous",
                                               "non_cmc_personal", "non_cmc_public"};
constexpr std::array<const char*, 2> kDomains{"personal", "public"};

template <std::size_t N>
std::optional<std::size_t> index_of(const std::array<const char*, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (s == names[i]) return i;
  return std::nullopt;
}

constexpr std::array<const char*, 4> kStatuses{"raw", "autotagged", "in_progress", "complete"};

}  // namespace

const char* to_string(Mode m) {
  for (const auto& [mode, name] : kModes)
    if (mode == m) return name;
  return "";
}

std::optional<Mode> parse_mode(std::string_view s) {
  for (const auto& [mode, name] : kModes)
    if (s == name) return mode;
  return std::nullopt;
}

SubcorpusPath SubcorpusPath::indirect_written(Source source, Genre genre) {
  return SubcorpusPath(Mode::kIndirectWritten, Written{source, genre});
}

SubcorpusPath SubcorpusPath::direct_written(Channel channel) {
  return SubcorpusPath(Mode::kDirectWritten, channel);
}

SubcorpusPath SubcorpusPath::spoken(Domain domain) { return SubcorpusPath(Mode::kSpoken, domain); }

SubcorpusPath SubcorpusPath::parse(std::string_view path) {
  auto parts = split(path, '/');
  auto bad = [&]() { return InvalidValue("subcorpus", "'" + std::string(path) + "' is not a subcorpus path"); };
  auto mode = parse_mode(parts.front());
  if (!mode) throw bad();
  switch (*mode) {
    case Mode::kIndirectWritten: {
      if (parts.size() != 3) throw bad();
      auto s = index_of(kSources, parts[1]);
      auto g = index_of(kGenres, parts[2]);
      if (!s || !g) throw bad();
      return indirect_written(static_cast<Source>(*s), static_cast<Genre>(*g));
    }
    case Mode::kDirectWritten: {
      if (parts.size() != 2) throw bad();
      auto c = index_of(kChannels, parts[1]);
      if (!c) throw bad();
      return direct_written(static_cast<Channel>(*c));
    }
    case Mode::kSpoken: {
      if (parts.size() != 2) throw bad();
      auto d = index_of(kDomains, parts[1]);
      if (!d) throw bad();
      return spoken(static_cast<Domain>(*d));
    }
  }
  throw bad();
}

std::vector<SubcorpusPath> SubcorpusPath::all() {
  std::vector<SubcorpusPath> out;
  for (std::size_t s = 0; s < kSources.size(); ++s)
    for (std::size_t g = 0; g < kGenres.size(); ++g)
      out.push_back(indirect_written(static_cast<Source>(s), static_cast<Genre>(g)));
  for (std::size_t c = 0; c < kChannels.size(); ++c)
    out.push_back(direct_written(static_cast<Channel>(c)));
  for (std::size_t d = 0; d < kDomains.size(); ++d) out.push_back(spoken(static_cast<Domain>(d)));
  return out;
}

std::optional<SubcorpusPath::Written> SubcorpusPath::written() const {
  if (auto* w = std::get_if<Written>(&branch_)) return *w;
  return std::nullopt;
}

std::optional<Channel> SubcorpusPath::channel() const {
  if (auto* c = std::get_if<Channel>(&branch_)) return *c;
  return std::nullopt;
}

std::optional<Domain> SubcorpusPath::domain() const {
  if (auto* d = std::get_if<Domain>(&branch_)) return *d;
  return std::nullopt;
}

std::string SubcorpusPath::branch_name() const {
  return std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Written>)
          return std::string(kSources[static_cast<std::size_t>(b.source)]) + "-" +
                 kGenres[static_cast<std::size_t>(b.genre)];
        else if constexpr (std::is_same_v<T, Channel>)
          return kChannels[static_cast<std::size_t>(b)];
        else
          return kDomains[static_cast<std::size_t>(b)];
      },
      branch_);
}

std::string SubcorpusPath::str() const {
  std::string out = to_string(mode_);
  out += '/';
  if (auto w = written()) {
    out += kSources[static_cast<std::size_t>(w->source)];
    out += '/';
    out += kGenres[static_cast<std::size_t>(w->genre)];
  } else {
    out += branch_name();
  }
  return out;
}

const char* to_string(SentenceStatus s) { return kStatuses[static_cast<std::size_t>(s)]; }

std::optional<SentenceStatus> parse_status(std::string_view s) {
  if (auto i = index_of(kStatuses, s)) return static_cast<SentenceStatus>(*i);
  return std::nullopt;
}

std::size_t Document::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

const Document* Corpus::find(std::string_view doc_id) const {
  for (const auto& d : documents)
    if (d.doc_id == doc_id) return &d;
  return nullptr;
}

const Sentence* Corpus::find_sentence(std::string_view sentence_id) const {
  for (const auto& d : documents)
    for (const auto& s : d.sentences)
      if (s.id == sentence_id) return &s;
  return nullptr;
}

// -- tokenization ---------------------------------------------------------

std::vector<Token> tokenize(std::string_view text) {
  validate_utf8(text);
  enum class Run { kNone, kWord, kPunct };

  std::vector<Token> tokens;
  Run run = Run::kNone;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (run != Run::kNone) tokens.push_back({std::string(text.substr(start, end - start)), {}, {start, end}});
    run = Run::kNone;
  };

  for (std::size_t i = 0; i < text.size();) {
    CodePoint cp = decode_at(text, i);
    Run kind = is_space(cp.value) ? Run::kNone : is_punct(cp.value) ? Run::kPunct : Run::kWord;
    if (kind != run) {
      flush(i);
      run = kind;
      start = i;
    }
    i += cp.length;
  }
  flush(text.size());
  return tokens;
}

bool reconstructs(std::string_view text, const std::vector<Token>& tokens) {
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    if (t.span.begin < pos || t.span.end < t.span.begin || t.span.end > text.size()) return false;
    if (!trim_unicode(text.substr(pos, t.span.begin - pos)).empty()) return false;
    if (text.substr(t.span.begin, t.span.end - t.span.begin) != t.surface) return false;
    pos = t.span.end;
  }
  return trim_unicode(text.substr(pos)).empty();
}

std::string detokenize(std::string_view text, const std::vector<Token>& tokens) {
  std::string out;
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    out += text.substr(pos, t.span.begin - pos);
    out += t.surface;
    pos = t.span.end;
  }
  out += text.substr(std::min(pos, text.size()));
  return out;
}

// -- ingestion ------------------------------------------------------------

std::vector<std::string> split_sentences(std::string_view raw, SentenceSplitter splitter) {
  std::vector<std::string> out;
  if (splitter.mode == SplitMode::kNewline) {
    for (std::string_view line : split_lines(raw)) {
      std::string_view s = trim_unicode(line);
      if (!s.empty()) out.emplace_back(s);
    }
    return out;
  }

  // Danda mode: line breaks inside a sentence become single spaces, a blank
  // line is a hard boundary, and the danda run stays with its sentence.
  std::string current;
  auto emit = [&]() {
    std::string_view s = trim_unicode(current);
    if (!s.empty()) out.emplace_back(s);
    current.clear();
  };
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '\r' || raw[i] == '\n') {
      std::size_t newlines = 0;
      while (i < raw.size() && (raw[i] == '\r' || raw[i] == '\n' || raw[i] == ' ' || raw[i] == '\t')) {
        if (raw[i] == '\n') ++newlines;
        ++i;
      }
      if (newlines >= 2) emit();
      else current += ' ';
      continue;
    }
    CodePoint cp = decode_at(raw, i);
    current.append(raw.substr(i, cp.length));
    i += cp.length;
    if (cp.value == kDanda || cp.value == kDoubleDanda) {
      bool more = false;
      if (i < raw.size()) {
        char32_t next = decode_at(raw, i).value;
        more = next == kDanda || next == kDoubleDanda;
      }
      if (!more) emit();
    }
  }
  emit();
  return out;
}

std::string make_sentence_id(std::string_view doc_id, std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ".%04zu", ordinal);
  return std::string(doc_id) + buf;
}

bool is_valid_doc_id(std::string_view doc_id) {
  return !doc_id.empty() && doc_id.front() != '.' && !contains_space(doc_id) &&
         doc_id.find_first_of("/\\") == std::string_view::npos;
}

Document make_document(std::string_view raw, std::string doc_id, const SubcorpusPath& subcorpus,
                       SentenceSplitter splitter) {
  validate_utf8(raw);
  if (!is_valid_doc_id(doc_id))
    throw InvalidValue("doc_id", "'" + doc_id + "' is not a valid document id");
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.subcorpus = subcorpus;
  std::size_t ordinal = 0;
  for (std::string& text : split_sentences(raw, splitter)) {
    Sentence s;
    s.id = make_sentence_id(doc.doc_id, ++ordinal);
    s.tokens = tokenize(text);
    s.text = std::move(text);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

// -- statistics -----------------------------------------------------------

bool is_word_token(const Token& token) {
  if (token.tag && token.tag->convention == "RD__PUNC") return false;
  return !is_punct_only(token.surface);
}

CorpusStats& CorpusStats::operator+=(const CorpusStats& other) {
  word_count += other.word_count;
  sentence_count += other.sentence_count;
  for (const auto& [mode, c] : other.by_mode) {
    Counts& mine = by_mode[mode];
    mine.words += c.words;
    mine.sentences += c.sentences;
  }
  return *this;
}

CorpusStats compute_stats(const Document& doc) {
  CorpusStats stats;
  for (const auto& s : doc.sentences) {
    stats.sentence_count += 1;
    stats.word_count += static_cast<std::size_t>(
        std::count_if(s.tokens.begin(), s.tokens.end(), is_word_token));
  }
  if (!doc.sentences.empty())
    stats.by_mode[doc.subcorpus.mode()] = {stats.word_count, stats.sentence_count};
  return stats;
}

CorpusStats compute_stats(const Corpus& corpus) {
  CorpusStats stats;
  for (const auto& d : corpus.documents) stats += compute_stats(d);
  return stats;
}

// -- tagging --------------------------------------------------------------

namespace {

Token& token_at(Sentence& s, std::size_t index) {
  if (index >= s.tokens.size()) throw IndexOutOfRange(index, s.tokens.size());
  return s.tokens[index];
}

bool all_manual(const Sentence& s) {
  return !s.tokens.empty() &&
         std::all_of(s.tokens.begin(), s.tokens.end(), [](const Token& t) { return t.is_manual(); });
}

void settle_status(Sentence& s) {
  s.status = all_manual(s) ? SentenceStatus::kComplete : SentenceStatus::kInProgress;
}

}  // namespace

void apply_tag(Sentence& sentence, std::size_t index, TagAssignment tag) {
  token_at(sentence, index).tag = std::move(tag);
  settle_status(sentence);
}

void confirm_token(Sentence& sentence, std::size_t index) {
  Token& t = token_at(sentence, index);
  if (!t.is_suggestion()) throw NoSuggestion(sentence.id, index);
  t.tag->provenance = Provenance::kManual;
  settle_status(sentence);
}

std::size_t confirm_all(Sentence& sentence) {
  std::size_t n = 0;
  for (auto& t : sentence.tokens) {
    if (t.is_suggestion()) {
      t.tag->provenance = Provenance::kManual;
      ++n;
    }
  }
  if (n > 0) settle_status(sentence);
  return n;
}

void clear_suggestion(Sentence& sentence, std::size_t index) {
  Token& t = token_at(sentence, index);
  if (!t.is_suggestion()) throw NoSuggestion(sentence.id, index);
  t.tag.reset();
}

void clear_tags(Sentence& sentence) {
  for (auto& t : sentence.tokens) t.tag.reset();
  sentence.status = SentenceStatus::kRaw;
}

SentenceStatus document_status(const Document& doc) {
  bool all_complete = true;
  bool all_raw = true;
  bool untouched = true;  // only raw / autotagged
  for (const auto& s : doc.sentences) {
    all_complete = all_complete && s.status == SentenceStatus::kComplete;
    all_raw = all_raw && s.status == SentenceStatus::kRaw;
    untouched = untouched &&
                (s.status == SentenceStatus::kRaw || s.status == SentenceStatus::kAutotagged);
  }
  if (doc.sentences.empty() || all_raw) return SentenceStatus::kRaw;
  if (all_complete) return SentenceStatus::kComplete;
  if (untouched) return SentenceStatus::kAutotagged;
  return SentenceStatus::kInProgress;
}

}  // namespace ann
