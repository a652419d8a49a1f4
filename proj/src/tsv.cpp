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

#include <algorithm>
#include <optional>

#include "ann/error.hpp"
#include "ann/serialization.hpp"
#include "ann/text.hpp"

namespace ann {

namespace {

constexpr std::string_view kDoc = "#doc ";
constexpr std::string_view kSubcorpus = "#subcorpus ";
constexpr std::string_view kMeta = "#meta ";
constexpr std::string_view kSid = "#sid ";
constexpr std::string_view kStatus = "#status ";
constexpr std::string_view kText = "#text ";

// Assigns spans by finding each surface, in order, after optional whitespace.
bool locate_spans(std::string_view text, std::vector<Token>& tokens) {
  std::size_t pos = 0;
  auto skip_space = [&]() {
    while (pos < text.size()) {
      CodePoint cp = decode_at(text, pos);
      if (!is_space(cp.value)) break;
      pos += cp.length;
    }
  };
  for (auto& t : tokens) {
    skip_space();
    if (text.substr(pos, t.surface.size()) != t.surface) return false;
    t.span = {pos, pos + t.surface.size()};
    pos += t.surface.size();
  }
  skip_space();
  return pos == text.size();
}

SentenceStatus derive_status(const Sentence& s) {
  bool any_tag = false, any_manual = false, all_manual = !s.tokens.empty();
  for (const auto& t : s.tokens) {
    any_tag = any_tag || t.tag.has_value();
    any_manual = any_manual || t.is_manual();
    all_manual = all_manual && t.is_manual();
  }
  if (all_manual) return SentenceStatus::kComplete;
  if (any_manual) return SentenceStatus::kInProgress;
  return any_tag ? SentenceStatus::kAutotagged : SentenceStatus::kRaw;
}

struct PendingSentence {
  Sentence sentence;
  std::size_t line = 0;
  bool has_text = false;
  bool has_status = false;
};

void finish_sentence(PendingSentence& p, Document& doc) {
  Sentence& s = p.sentence;
  if (!p.has_text) {
    s.text.clear();
    for (const auto& t : s.tokens) {
      if (!s.text.empty()) s.text += ' ';
      s.text += t.surface;
    }
  }
  if (!locate_spans(s.text, s.tokens))
    throw ParseError(p.line, "tokens of sentence '" + s.id + "' do not match its #text");
  if (!p.has_status) s.status = derive_status(s);
  doc.sentences.push_back(std::move(s));
}

}  // namespace

std::string export_tsv(const Document& doc, const Tagset& tagset) {
  std::string out;
  out += kDoc;
  out += doc.doc_id;
  out += '\n';
  out += kSubcorpus;
  out += doc.subcorpus.str();
  out += '\n';
  if (!doc.metadata_ref.empty()) {
    out += kMeta;
    out += doc.metadata_ref;
    out += '\n';
  }
  for (const auto& s : doc.sentences) {
    out += '\n';
    out += kSid;
    out += s.id;
    out += '\n';
    out += kStatus;
    out += to_string(s.status);
    out += '\n';
    out += kText;
    out += s.text;
    out += '\n';
    for (const auto& t : s.tokens) {
      out += t.surface;
      if (t.tag) {
        tagset.parse_tag(t.tag->convention);
        out += '\t';
        out += t.tag->convention;
        out += '\t';
        out += to_string(t.tag->provenance);
      } else {
        out += "\t-\t-";
      }
      out += '\n';
    }
  }
  return out;
}

std::vector<Document> import_tsv_stream(std::string_view text, const Tagset& tagset) {
  validate_utf8(text);
  std::vector<Document> docs;
  std::optional<PendingSentence> pending;
  bool has_subcorpus = false;
  std::size_t doc_line = 0;

  auto close_document = [&]() {
    if (docs.empty()) return;
    if (pending) finish_sentence(*pending, docs.back());
    pending.reset();
    if (!has_subcorpus) throw ParseError(doc_line, "document has no #subcorpus line");
  };

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    if (line.starts_with(kDoc)) {
      close_document();
      std::string id(line.substr(kDoc.size()));
      if (id.empty() || contains_space(id)) throw ParseError(line_no, "bad document id");
      docs.push_back({});
      docs.back().doc_id = std::move(id);
      has_subcorpus = false;
      doc_line = line_no;
      continue;
    }
    if (docs.empty()) throw ParseError(line_no, "expected '#doc <id>' before anything else");
    Document& doc = docs.back();

    if (line.starts_with(kSubcorpus)) {
      if (pending || !doc.sentences.empty())
        throw ParseError(line_no, "#subcorpus must precede the sentences");
      try {
        doc.subcorpus = SubcorpusPath::parse(line.substr(kSubcorpus.size()));
      } catch (const InvalidValue& e) {
        throw ParseError(line_no, e.what());
      }
      has_subcorpus = true;
    } else if (line.starts_with(kMeta)) {
      if (pending || !doc.sentences.empty())
        throw ParseError(line_no, "#meta must precede the sentences");
      doc.metadata_ref = std::string(line.substr(kMeta.size()));
    } else if (line.starts_with(kSid)) {
      if (pending) finish_sentence(*pending, doc);
      pending.emplace();
      pending->line = line_no;
      pending->sentence.id = std::string(line.substr(kSid.size()));
      if (pending->sentence.id.empty() || contains_space(pending->sentence.id))
        throw ParseError(line_no, "bad sentence id");
    } else if (line.starts_with(kStatus)) {
      if (!pending || !pending->sentence.tokens.empty())
        throw ParseError(line_no, "#status must follow #sid");
      auto st = parse_status(line.substr(kStatus.size()));
      if (!st) throw ParseError(line_no, "unknown status '" + std::string(line.substr(kStatus.size())) + "'");
      pending->sentence.status = *st;
      pending->has_status = true;
    } else if (line.starts_with(kText)) {
      if (!pending || !pending->sentence.tokens.empty())
        throw ParseError(line_no, "#text must follow #sid");
      pending->sentence.text = std::string(line.substr(kText.size()));
      pending->has_text = true;
    } else {
      if (!pending) throw ParseError(line_no, "token line outside a sentence");
      auto cols = split(line, '\t');
      if (cols.size() != 3) throw ParseError(line_no, "expected surface<TAB>tag<TAB>provenance");
      if (cols[0].empty() || contains_space(cols[0])) throw ParseError(line_no, "bad token surface");
      Token t;
      t.surface = std::string(cols[0]);
      bool no_tag = cols[1] == "-";
      bool no_prov = cols[2] == "-";
      if (no_tag != no_prov) throw ParseError(line_no, "tag and provenance must both be '-' or both set");
      if (!no_tag) {
        auto prov = parse_provenance(cols[2]);
        if (!prov) throw ParseError(line_no, "unknown provenance '" + std::string(cols[2]) + "'");
        if (!tagset.find_convention(cols[1])) throw UnknownTag(std::string(cols[1]), line_no);
        t.tag = tagset.assign(cols[1], *prov);
      }
      pending->sentence.tokens.push_back(std::move(t));
    }
  }
  close_document();
  return docs;
}

Document import_tsv(std::string_view text, const Tagset& tagset) {
  auto docs = import_tsv_stream(text, tagset);
  if (docs.size() != 1)
    throw ParseError(1, "expected exactly one document, found " + std::to_string(docs.size()));
  return std::move(docs.front());
}

}  // namespace ann
