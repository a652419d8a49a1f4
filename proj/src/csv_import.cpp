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

#include <set>

#include "ann/error.hpp"
#include "ann/serialization.hpp"
#include "ann/text.hpp"

namespace ann {

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC 4180: quoted fields may contain commas, doubled quotes and newlines.
std::vector<CsvRow> parse_csv(std::string_view in) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  row.line = 1;

  auto end_field = [&]() {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&]() {
    end_field();
    if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    char c = in[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < in.size() && in[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw ParseError(line, "stray quote inside an unquoted field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw ParseError(line, "unterminated quoted field");
  end_row();
  return rows;
}

std::vector<Token> whitespace_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t start = 0;
  bool in_word = false;
  for (std::size_t i = 0; i < text.size();) {
    CodePoint cp = decode_at(text, i);
    bool space = is_space(cp.value);
    if (space && in_word) {
      tokens.push_back({std::string(text.substr(start, i - start)), {}, {start, i}});
      in_word = false;
    } else if (!space && !in_word) {
      start = i;
      in_word = true;
    }
    i += cp.length;
  }
  if (in_word) tokens.push_back({std::string(text.substr(start)), {}, {start, text.size()}});
  return tokens;
}

}  // namespace

CsvImport import_legacy_csv(std::string_view csv, const std::string& doc_id,
                            const SubcorpusPath& subcorpus, const Tagset& tagset,
                            const std::unordered_set<std::string>& taken) {
  validate_utf8(csv);
  if (csv.starts_with("\xEF\xBB\xBF")) csv.remove_prefix(3);  // spreadsheet exports carry a BOM
  auto rows = parse_csv(csv);
  if (rows.empty()) throw ParseError(1, "missing header row");

  const auto& header = rows.front().fields;
  auto col = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == name) return i;
    return std::nullopt;
  };
  auto id_col = col("sentence_id");
  auto text_col = col("text");
  auto tags_col = col("tags");
  if (!id_col || !text_col) throw ParseError(1, "header must contain sentence_id and text");

  CsvImport out;
  out.document.doc_id = doc_id;
  out.document.subcorpus = subcorpus;

  std::set<std::string> seen;
  bool ids_ok = true;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    auto cell = [&](std::size_t i) -> std::string_view {
      return i < row.fields.size() ? std::string_view(row.fields[i]) : std::string_view{};
    };
    std::string_view text = trim_unicode(cell(*text_col));
    if (text.empty()) {
      out.warnings.push_back("row " + std::to_string(r) + " (line " + std::to_string(row.line) +
                             "): empty text, skipped");
      continue;
    }

    Sentence s;
    s.id = std::string(trim(cell(*id_col)));
    if (s.id.empty() || contains_space(s.id) || taken.contains(s.id) || !seen.insert(s.id).second)
      ids_ok = false;
    s.text = std::string(text);
    s.tokens = whitespace_tokens(s.text);

    if (tags_col) {
      auto labels = whitespace_tokens(trim_unicode(cell(*tags_col)));
      if (!labels.empty()) {
        if (labels.size() != s.tokens.size()) throw MisalignedTags(r, s.tokens.size(), labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
          if (labels[i].surface != "-")
            s.tokens[i].tag = tagset.assign_label(labels[i].surface, Provenance::kManual);
      }
    }

    bool any = false, all = true;
    for (const auto& t : s.tokens) {
      any = any || t.tag.has_value();
      all = all && t.tag.has_value();
    }
    s.status = all ? SentenceStatus::kComplete : any ? SentenceStatus::kInProgress : SentenceStatus::kRaw;
    out.document.sentences.push_back(std::move(s));
  }

  if (!ids_ok) {
    out.warnings.push_back("supplied sentence ids are missing, duplicated or already in use; "
                           "regenerated as " + doc_id + ".NNNN");
    std::size_t ordinal = 0;
    for (auto& s : out.document.sentences) s.id = make_sentence_id(doc_id, ++ordinal);
  }
  return out;
}

CsvImport import_legacy_csv(std::string_view csv, const std::string& doc_id,
                            const SubcorpusPath& subcorpus, CorpusStore& store) {
  if (store.contains(doc_id)) throw DuplicateDocument(doc_id);
  auto ids = store.sentence_ids();
  std::unordered_set<std::string> taken(ids.begin(), ids.end());
  CsvImport result = import_legacy_csv(csv, doc_id, subcorpus, store.tagset(), taken);
  store.add_document(result.document);
  return result;
}

}  // namespace ann
