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

// Corpus file formats.
//
// Canonical TSV (one document per file):
//
//   #doc folktale01
//   #subcorpus indirect_written/book/prose
//   #meta written-0001
//
//   #sid folktale01.0001
//   #status in_progress
//   #text həm go
//   həm<TAB>PR__PRP<TAB>manual
//   go<TAB>-<TAB>-
//
// `#meta`, `#status` and `#text` are optional on input. Without `#text` the
// sentence text is the token surfaces joined by single spaces; without
// `#status` the status is derived from the tags. Header lines are
// recognised by their `#keyword ` prefix; token surfaces never contain a
// space, so a token such as "#" cannot be mistaken for a header.
//
// XML export: see data/corpus.xsd for the schema.

#ifndef ANN_SERIALIZATION_HPP_
#define ANN_SERIALIZATION_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ann/corpus.hpp"
#include "ann/metadata.hpp"
#include "ann/store.hpp"
#include "ann/tagset.hpp"

namespace ann {

// -- TSV ------------------------------------------------------------------

/// Throws UnknownTag if a token carries a tag outside `tagset`.
std::string export_tsv(const Document& doc, const Tagset& tagset);
/// Throws ParseError / UnknownTag with 1-based line numbers.
Document import_tsv(std::string_view text, const Tagset& tagset);
/// Several documents back to back, each starting with its `#doc` line.
std::vector<Document> import_tsv_stream(std::string_view text, const Tagset& tagset);

// -- XML ------------------------------------------------------------------

/// Minimal DOM used by the XML reader. Leaf elements keep their text
/// verbatim; whitespace between child elements is dropped.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlElement> children;
  std::string text;

  const std::string* attribute(std::string_view key) const;
};

/// Parses a well-formed XML document (elements, attributes, character and
/// entity references, comments, CDATA, processing instructions).
/// Throws ParseError.
XmlElement parse_xml(std::string_view xml);

std::string xml_escape(std::string_view text, bool attribute);

/// Deterministic export: subcorpora sorted by path, documents by id, record
/// fields by name. Throws CatalogInvalid if validate_catalog() reports
/// errors and UnknownTag for tags outside `tagset`.
std::string export_xml(const Corpus& corpus, const Catalog& catalog, const Tagset& tagset);

struct XmlImport {
  Corpus corpus;
  Catalog catalog;
};

/// Reads back what export_xml() writes. Throws ParseError / UnknownTag.
XmlImport import_xml(std::string_view xml, const Tagset& tagset);

// -- legacy spreadsheet CSV -----------------------------------------------

struct CsvImport {
  Document document;
  std::vector<std::string> warnings;
};

/// RFC 4180 CSV with header `sentence_id,text[,tags]`. Text is split on
/// whitespace only (spreadsheet rows are pre-tokenized); `tags` holds one
/// leaf label per token, `-` for an untagged token, or is left empty.
/// Supplied sentence ids are kept when they are unique and not in `taken`;
/// otherwise every id is regenerated as `<doc_id>.<ordinal>` with a warning.
/// Throws MisalignedTags, UnknownLabel, ParseError.
CsvImport import_legacy_csv(std::string_view csv, const std::string& doc_id,
                            const SubcorpusPath& subcorpus, const Tagset& tagset,
                            const std::unordered_set<std::string>& taken = {});

/// Imports into `store`. Throws DuplicateDocument when doc_id exists.
CsvImport import_legacy_csv(std::string_view csv, const std::string& doc_id,
                            const SubcorpusPath& subcorpus, CorpusStore& store);

}  // namespace ann

#endif  // ANN_SERIALIZATION_HPP_
