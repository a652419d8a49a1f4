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

// Catalog metadata.
//
// Every document points (Document::metadata_ref) at one cataloguing record
// whose kind matches its mode: `written` for indirect written sources, `cmc`
// for direct written communication and `recording` for spoken transcripts.
// Each subcorpus branch additionally carries one `descriptive` record
// (summary, per-document themes, structure and access notes). The
// corpus-wide GeneralMeta is derived from both and never edited by hand.

#ifndef ANN_METADATA_HPP_
#define ANN_METADATA_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ann/corpus.hpp"
#include "ann/report.hpp"

namespace ann {

enum class RecordKind { kWritten, kCmc, kRecording, kDescriptive };

const char* to_string(RecordKind k);
std::optional<RecordKind> parse_record_kind(std::string_view s);
/// The cataloguing record kind expected for documents of a mode.
RecordKind catalog_kind_for(Mode mode);

struct Participant {
  std::string pseudonym;
  std::string role;
  std::optional<std::string> age_band;
  std::optional<std::string> gender;

  friend bool operator==(const Participant&, const Participant&) = default;
};

struct WrittenSourceMeta {
  std::string title;
  std::string author;
  std::string publication;
  std::string publication_date;
  std::optional<std::string> page_range;
  std::string entry_date;
  std::string entered_by;
  std::vector<std::string> sentence_ids;

  friend bool operator==(const WrittenSourceMeta&, const WrittenSourceMeta&) = default;
};

/// Asynchronous CMC needs source, writer, dates and url; synchronous CMC and
/// letters need only the date and the participants. When `channel` is given
/// the channel-specific requirements are checked at creation, otherwise
/// validate_catalog() checks them against the owning document.
struct CmcMeta {
  std::optional<Channel> channel;
  std::optional<std::string> source_name;
  std::optional<std::string> writer;
  std::string posted_date;
  std::optional<std::string> entry_date;
  std::optional<std::string> url;
  std::vector<Participant> participants;
  std::vector<std::string> sentence_ids;

  friend bool operator==(const CmcMeta&, const CmcMeta&) = default;
};

struct RecordingMeta {
  std::string record_date;
  std::string record_time;
  std::string place;
  std::string recorded_by;
  std::string original_format;
  std::string original_encoding;
  std::string current_format;
  std::string current_encoding;
  std::string device;
  std::string context_description;
  double duration_seconds = 0;
  std::optional<std::string> transfer_software;
  std::vector<Participant> participants;
  std::vector<Participant> bystanders;
  std::vector<std::string> sentence_ids;

  friend bool operator==(const RecordingMeta&, const RecordingMeta&) = default;
};

struct DescriptiveMeta {
  SubcorpusPath subcorpus = SubcorpusPath::spoken(Domain::kPersonal);
  std::string summary;
  std::map<std::string, std::string> themes;  // doc id -> theme
  std::string structure_note;
  std::string access_software_note;

  friend bool operator==(const DescriptiveMeta&, const DescriptiveMeta&) = default;
};

struct MetadataRecord {
  std::string id;
  std::variant<WrittenSourceMeta, CmcMeta, RecordingMeta, DescriptiveMeta> body;

  RecordKind kind() const { return static_cast<RecordKind>(body.index()); }
  /// Sentence ids the record vouches for; empty for descriptive records.
  const std::vector<std::string>& sentence_ids() const;
  std::vector<std::string>& sentence_ids();

  friend bool operator==(const MetadataRecord&, const MetadataRecord&) = default;
};

/// Required fields, in the order they are reported by MissingField.
std::vector<std::string> required_fields(RecordKind kind,
                                         std::optional<Channel> channel = std::nullopt);

/// Validates a field map (a JSON object) into a record. Every absent
/// required field is reported in one MissingField; bad values and unknown
/// keys raise InvalidValue.
MetadataRecord create_record(RecordKind kind, const nlohmann::json& fields, std::string id);

/// `{"kind": ..., "id": ..., <fields>}`.
nlohmann::json to_json(const MetadataRecord& record);
MetadataRecord record_from_json(const nlohmann::json& j);

/// Record collection with id allocation. Ids look like `written-0003`.
class Catalog {
 public:
  MetadataRecord& create(RecordKind kind, const nlohmann::json& fields);
  /// Throws InvalidValue("id", ...) when the id is already taken.
  MetadataRecord& add(MetadataRecord record);
  bool remove(std::string_view id);

  const MetadataRecord* find(std::string_view id) const;
  MetadataRecord* find(std::string_view id);
  const std::vector<MetadataRecord>& records() const { return records_; }
  std::vector<const MetadataRecord*> descriptive_for(const SubcorpusPath& path) const;

 private:
  std::string next_id(RecordKind kind) const;
  std::vector<MetadataRecord> records_;
};

/// Errors: MissingCatalogRecord, RecordKindMismatch, DanglingSentenceRef,
/// MissingUrl, MissingParticipants, DuplicateDescriptiveRecord.
/// Warnings: MissingDescriptiveRecord, SharedCatalogRecord.
ValidationReport validate_catalog(const Corpus& corpus, const Catalog& catalog);

struct GeneralMeta {
  std::map<std::string, std::string> locations;  // subcorpus path -> store directory
  CorpusStats stats;
  std::vector<std::string> links;  // store-relative file paths, sorted

  friend bool operator==(const GeneralMeta&, const GeneralMeta&) = default;
};

/// Throws CatalogInvalid when validate_catalog() reports errors.
GeneralMeta build_general_meta(const Corpus& corpus, const Catalog& catalog);

nlohmann::json to_json(const CorpusStats& stats);
nlohmann::json to_json(const GeneralMeta& meta);

// Store layout: one directory per mode holding `<doc_id>.tsv` files plus
// `catalog-<branch>.json` and `descriptive-<branch>.json` per branch.
std::string document_path(const Document& doc);
std::string catalog_path(const SubcorpusPath& path);
std::string descriptive_path(const SubcorpusPath& path);
inline constexpr std::string_view kGeneralMetaFile = "corpus-meta.json";
inline constexpr std::string_view kUnassignedCatalogFile = "catalog-unassigned.json";

}  // namespace ann

#endif  // ANN_METADATA_HPP_
