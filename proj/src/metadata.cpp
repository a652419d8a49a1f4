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

#include "ann/metadata.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <set>
#include <unordered_set>

#include "ann/error.hpp"

namespace ann {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 4> kKindNames{"written", "cmc", "recording", "descriptive"};

bool parse_int(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// YYYY-MM-DD
bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  int y, m, d;
  if (!parse_int(s.substr(0, 4), y) || !parse_int(s.substr(5, 2), m) || !parse_int(s.substr(8, 2), d))
    return false;
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                     std::chrono::day{static_cast<unsigned>(d)}}
      .ok();
}

// HH:MM or HH:MM:SS
bool is_iso_time(std::string_view s) {
  if (s.size() != 5 && s.size() != 8) return false;
  int h, m, sec = 0;
  if (s[2] != ':' || !parse_int(s.substr(0, 2), h) || !parse_int(s.substr(3, 2), m)) return false;
  if (s.size() == 8 && (s[5] != ':' || !parse_int(s.substr(6, 2), sec))) return false;
  return h >= 0 && h < 24 && m >= 0 && m < 60 && sec >= 0 && sec < 60;
}

std::optional<Channel> parse_channel(std::string_view s) {
  auto path = "direct_written/" + std::string(s);
  try {
    return SubcorpusPath::parse(path).channel();
  } catch (const InvalidValue&) {
    return std::nullopt;
  }
}

std::string channel_name(Channel c) { return SubcorpusPath::direct_written(c).branch_name(); }

// Reads fields out of a JSON object, remembering which keys were consumed
// and which required ones were absent.
class FieldReader {
 public:
  explicit FieldReader(const json& fields) : fields_(fields) {
    if (!fields_.is_object()) throw InvalidValue("fields", "must be a JSON object");
  }

  bool has(const std::string& name) const {
    auto it = fields_.find(name);
    return it != fields_.end() && !it->is_null();
  }

  std::optional<std::string> opt_string(const std::string& name) {
    used_.insert(name);
    if (!has(name)) return std::nullopt;
    const json& v = fields_.at(name);
    if (!v.is_string()) {
      invalid(name, "must be a string");
      return std::nullopt;
    }
    auto s = v.get<std::string>();
    if (s.empty()) return std::nullopt;
    return s;
  }

  std::string req_string(const std::string& name) {
    auto s = opt_string(name);
    if (!s) {
      missing_unless_mistyped(name);
      return {};
    }
    return *s;
  }

  std::optional<std::string> opt_date(const std::string& name) {
    auto s = opt_string(name);
    if (s && !is_iso_date(*s)) invalid(name, "'" + *s + "' is not an ISO-8601 date (YYYY-MM-DD)");
    return s;
  }

  std::string req_date(const std::string& name) {
    auto s = opt_date(name);
    if (!s) missing_unless_mistyped(name);
    return s.value_or("");
  }

  std::vector<std::string> string_list(const std::string& name) {
    used_.insert(name);
    std::vector<std::string> out;
    if (!has(name)) return out;
    const json& v = fields_.at(name);
    if (!v.is_array()) {
      invalid(name, "must be a list of strings");
      return out;
    }
    for (const auto& e : v) {
      if (!e.is_string() || e.get<std::string>().empty()) {
        invalid(name, "must be a list of non-empty strings");
        return {};
      }
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::vector<Participant> participants(const std::string& name, bool required) {
    used_.insert(name);
    std::vector<Participant> out;
    if (has(name)) {
      const json& v = fields_.at(name);
      if (!v.is_array()) {
        invalid(name, "must be a list of participant objects");
        return out;
      }
      for (const auto& e : v) {
        if (!e.is_object()) {
          invalid(name, "must be a list of participant objects");
          return {};
        }
        Participant p;
        for (const auto& [key, val] : e.items()) {
          if (!val.is_string()) {
            invalid(name, "participant field '" + key + "' must be a string");
            return {};
          }
          auto s = val.get<std::string>();
          if (key == "pseudonym") p.pseudonym = s;
          else if (key == "role") p.role = s;
          else if (key == "age_band") p.age_band = s;
          else if (key == "gender") p.gender = s;
          else {
            invalid(name, "unknown participant field '" + key + "'");
            return {};
          }
        }
        if (p.pseudonym.empty() || p.role.empty()) {
          invalid(name, "every participant needs a pseudonym and a role");
          return {};
        }
        out.push_back(std::move(p));
      }
    }
    if (required && out.empty()) missing(name);
    return out;
  }

  double req_positive_number(const std::string& name) {
    used_.insert(name);
    if (!has(name)) {
      missing(name);
      return 0;
    }
    const json& v = fields_.at(name);
    if (!v.is_number()) {
      invalid(name, "must be a number");
      return 0;
    }
    double d = v.get<double>();
    if (!(d > 0)) invalid(name, "must be greater than zero");
    return d;
  }

  void missing(const std::string& name) { missing_.push_back(name); }
  // A present value of the wrong type was already reported as invalid.
  void missing_unless_mistyped(const std::string& name) {
    if (!has(name) || fields_.at(name).is_string()) missing(name);
  }
  void invalid(const std::string& name, const std::string& reason) {
    if (!invalid_) invalid_ = InvalidValue(name, reason);
  }
  void mark_used(const std::string& name) { used_.insert(name); }

  void finish() {
    if (!missing_.empty()) throw MissingField(missing_);
    if (invalid_) throw *invalid_;
    for (const auto& [key, _] : fields_.items())
      if (!used_.contains(key)) throw InvalidValue(key, "unknown field");
  }

 private:
  const json& fields_;
  std::set<std::string> used_;
  std::vector<std::string> missing_;
  std::optional<InvalidValue> invalid_;
};

json participants_json(const std::vector<Participant>& ps) {
  json arr = json::array();
  for (const auto& p : ps) {
    json o = {{"pseudonym", p.pseudonym}, {"role", p.role}};
    if (p.age_band) o["age_band"] = *p.age_band;
    if (p.gender) o["gender"] = *p.gender;
    arr.push_back(std::move(o));
  }
  return arr;
}

void put_opt(json& j, const char* name, const std::optional<std::string>& v) {
  if (v) j[name] = *v;
}

const std::vector<std::string> kNoSentences;

}  // namespace

const char* to_string(RecordKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<RecordKind> parse_record_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (s == kKindNames[i]) return static_cast<RecordKind>(i);
  return std::nullopt;
}

RecordKind catalog_kind_for(Mode mode) {
  switch (mode) {
    case Mode::kIndirectWritten:
      return RecordKind::kWritten;
    case Mode::kDirectWritten:
      return RecordKind::kCmc;
    case Mode::kSpoken:
      return RecordKind::kRecording;
  }
  return RecordKind::kWritten;
}

const std::vector<std::string>& MetadataRecord::sentence_ids() const {
  return std::visit(
      [](const auto& b) -> const std::vector<std::string>& {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, DescriptiveMeta>)
          return kNoSentences;
        else
          return b.sentence_ids;
      },
      body);
}

std::vector<std::string>& MetadataRecord::sentence_ids() {
  static std::vector<std::string> none;
  return std::visit(
      [](auto& b) -> std::vector<std::string>& {
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, DescriptiveMeta>) {
          none.clear();
          return none;
        } else {
          return b.sentence_ids;
        }
      },
      body);
}

std::vector<std::string> required_fields(RecordKind kind, std::optional<Channel> channel) {
  switch (kind) {
    case RecordKind::kWritten:
      return {"title", "author", "publication", "publication_date", "entry_date", "entered_by"};
    case RecordKind::kCmc:
      if (!channel) return {"posted_date"};
      if (*channel == Channel::kCmcAsynchronous)
        return {"source_name", "writer", "posted_date", "entry_date", "url"};
      return {"posted_date", "participants"};
    case RecordKind::kRecording:
      return {"record_date",     "record_time",       "place",          "recorded_by",
              "original_format", "original_encoding", "current_format", "current_encoding",
              "device",          "context_description", "duration_seconds", "participants"};
    case RecordKind::kDescriptive:
      return {"subcorpus", "summary", "structure_note", "access_software_note"};
  }
  return {};
}

MetadataRecord create_record(RecordKind kind, const json& fields, std::string id) {
  FieldReader r(fields);
  MetadataRecord rec;
  rec.id = std::move(id);

  switch (kind) {
    case RecordKind::kWritten: {
      WrittenSourceMeta m;
      m.title = r.req_string("title");
      m.author = r.req_string("author");
      m.publication = r.req_string("publication");
      m.publication_date = r.req_date("publication_date");
      m.page_range = r.opt_string("page_range");
      m.entry_date = r.req_date("entry_date");
      m.entered_by = r.req_string("entered_by");
      m.sentence_ids = r.string_list("sentence_ids");
      rec.body = std::move(m);
      break;
    }
    case RecordKind::kCmc: {
      CmcMeta m;
      if (auto c = r.opt_string("channel")) {
        m.channel = parse_channel(*c);
        if (!m.channel) r.invalid("channel", "'" + *c + "' is not a direct written channel");
      }
      bool async = m.channel == Channel::kCmcAsynchronous;
      bool conversational = m.channel && !async;
      m.source_name = r.opt_string("source_name");
      m.writer = r.opt_string("writer");
      m.posted_date = r.req_date("posted_date");
      m.entry_date = r.opt_date("entry_date");
      m.url = r.opt_string("url");
      m.participants = r.participants("participants", conversational);
      m.sentence_ids = r.string_list("sentence_ids");
      if (async) {
        if (!m.source_name) r.missing("source_name");
        if (!m.writer) r.missing("writer");
        if (!m.entry_date) r.missing("entry_date");
        if (!m.url) r.missing("url");
        if (!m.participants.empty())
          r.invalid("participants", "only recorded for synchronous CMC and non-CMC sources");
      } else if (conversational && m.url) {
        r.invalid("url", "only recorded for asynchronous CMC");
      }
      rec.body = std::move(m);
      break;
    }
    case RecordKind::kRecording: {
      RecordingMeta m;
      m.record_date = r.req_date("record_date");
      m.record_time = r.req_string("record_time");
      if (!m.record_time.empty() && !is_iso_time(m.record_time))
        r.invalid("record_time", "'" + m.record_time + "' is not HH:MM or HH:MM:SS");
      m.place = r.req_string("place");
      m.recorded_by = r.req_string("recorded_by");
      m.original_format = r.req_string("original_format");
      m.original_encoding = r.req_string("original_encoding");
      m.current_format = r.req_string("current_format");
      m.current_encoding = r.req_string("current_encoding");
      m.device = r.req_string("device");
      m.context_description = r.req_string("context_description");
      m.duration_seconds = r.req_positive_number("duration_seconds");
      m.transfer_software = r.opt_string("transfer_software");
      m.participants = r.participants("participants", true);
      m.bystanders = r.participants("bystanders", false);
      m.sentence_ids = r.string_list("sentence_ids");
      rec.body = std::move(m);
      break;
    }
    case RecordKind::kDescriptive: {
      DescriptiveMeta m;
      auto path = r.req_string("subcorpus");
      if (!path.empty()) {
        try {
          m.subcorpus = SubcorpusPath::parse(path);
        } catch (const InvalidValue& e) {
          r.invalid("subcorpus", e.what());
        }
      }
      m.summary = r.req_string("summary");
      r.mark_used("themes");
      if (r.has("themes")) {
        const json& t = fields.at("themes");
        if (!t.is_object()) {
          r.invalid("themes", "must map document ids to theme strings");
        } else {
          for (const auto& [doc, theme] : t.items()) {
            if (!theme.is_string()) {
              r.invalid("themes", "theme of '" + doc + "' must be a string");
              break;
            }
            m.themes[doc] = theme.get<std::string>();
          }
        }
      }
      m.structure_note = r.req_string("structure_note");
      m.access_software_note = r.req_string("access_software_note");
      rec.body = std::move(m);
      break;
    }
  }
  r.finish();
  return rec;
}

json to_json(const MetadataRecord& record) {
  json j = {{"kind", to_string(record.kind())}, {"id", record.id}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, WrittenSourceMeta>) {
          j["title"] = m.title;
          j["author"] = m.author;
          j["publication"] = m.publication;
          j["publication_date"] = m.publication_date;
          put_opt(j, "page_range", m.page_range);
          j["entry_date"] = m.entry_date;
          j["entered_by"] = m.entered_by;
          j["sentence_ids"] = m.sentence_ids;
        } else if constexpr (std::is_same_v<T, CmcMeta>) {
          if (m.channel) j["channel"] = channel_name(*m.channel);
          put_opt(j, "source_name", m.source_name);
          put_opt(j, "writer", m.writer);
          j["posted_date"] = m.posted_date;
          put_opt(j, "entry_date", m.entry_date);
          put_opt(j, "url", m.url);
          if (!m.participants.empty()) j["participants"] = participants_json(m.participants);
          j["sentence_ids"] = m.sentence_ids;
        } else if constexpr (std::is_same_v<T, RecordingMeta>) {
          j["record_date"] = m.record_date;
          j["record_time"] = m.record_time;
          j["place"] = m.place;
          j["recorded_by"] = m.recorded_by;
          j["original_format"] = m.original_format;
          j["original_encoding"] = m.original_encoding;
          j["current_format"] = m.current_format;
          j["current_encoding"] = m.current_encoding;
          j["device"] = m.device;
          j["context_description"] = m.context_description;
          j["duration_seconds"] = m.duration_seconds;
          put_opt(j, "transfer_software", m.transfer_software);
          j["participants"] = participants_json(m.participants);
          j["bystanders"] = participants_json(m.bystanders);
          j["sentence_ids"] = m.sentence_ids;
        } else {
          j["subcorpus"] = m.subcorpus.str();
          j["summary"] = m.summary;
          j["themes"] = m.themes;
          j["structure_note"] = m.structure_note;
          j["access_software_note"] = m.access_software_note;
        }
      },
      record.body);
  return j;
}

MetadataRecord record_from_json(const json& j) {
  if (!j.is_object()) throw InvalidValue("record", "must be a JSON object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw MissingField({"kind"});
  auto kind = parse_record_kind(kind_it->get<std::string>());
  if (!kind) throw InvalidValue("kind", "unknown record kind '" + kind_it->get<std::string>() + "'");
  auto id_it = j.find("id");
  if (id_it == j.end() || !id_it->is_string() || id_it->get<std::string>().empty())
    throw MissingField({"id"});
  json fields = j;
  fields.erase("kind");
  fields.erase("id");
  return create_record(*kind, fields, id_it->get<std::string>());
}

// -- Catalog --------------------------------------------------------------

std::string Catalog::next_id(RecordKind kind) const {
  std::string prefix = std::string(to_string(kind)) + "-";
  int max = 0;
  for (const auto& r : records_) {
    if (!r.id.starts_with(prefix)) continue;
    int n = 0;
    if (parse_int(std::string_view(r.id).substr(prefix.size()), n)) max = std::max(max, n);
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", max + 1);
  return prefix + buf;
}

MetadataRecord& Catalog::create(RecordKind kind, const json& fields) {
  return add(create_record(kind, fields, next_id(kind)));
}

MetadataRecord& Catalog::add(MetadataRecord record) {
  if (record.id.empty()) throw MissingField({"id"});
  if (find(record.id)) throw InvalidValue("id", "record '" + record.id + "' already exists");
  records_.push_back(std::move(record));
  return records_.back();
}

bool Catalog::remove(std::string_view id) {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
  if (it == records_.end()) return false;
  records_.erase(it);
  return true;
}

const MetadataRecord* Catalog::find(std::string_view id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

MetadataRecord* Catalog::find(std::string_view id) {
  for (auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<const MetadataRecord*> Catalog::descriptive_for(const SubcorpusPath& path) const {
  std::vector<const MetadataRecord*> out;
  for (const auto& r : records_)
    if (auto* d = std::get_if<DescriptiveMeta>(&r.body); d && d->subcorpus == path) out.push_back(&r);
  return out;
}

// -- validation -----------------------------------------------------------

ValidationReport validate_catalog(const Corpus& corpus, const Catalog& catalog) {
  ValidationReport report;

  std::unordered_set<std::string_view> sentences;
  std::set<SubcorpusPath> branches;
  std::map<std::string, std::vector<std::string>> referrers;  // record id -> doc ids
  for (const auto& doc : corpus.documents) {
    branches.insert(doc.subcorpus);
    for (const auto& s : doc.sentences) sentences.insert(s.id);
  }

  for (const auto& doc : corpus.documents) {
    const MetadataRecord* rec = doc.metadata_ref.empty() ? nullptr : catalog.find(doc.metadata_ref);
    if (!rec) {
      report.add(Severity::kError, "MissingCatalogRecord", doc.doc_id,
                 doc.metadata_ref.empty() ? "document has no cataloguing record"
                                          : "cataloguing record '" + doc.metadata_ref + "' does not exist");
      continue;
    }
    referrers[rec->id].push_back(doc.doc_id);
    RecordKind expected = catalog_kind_for(doc.subcorpus.mode());
    if (rec->kind() != expected) {
      report.add(Severity::kError, "RecordKindMismatch", doc.doc_id,
                 std::string("document in ") + to_string(doc.subcorpus.mode()) + " needs a " +
                     to_string(expected) + " record, '" + rec->id + "' is " + to_string(rec->kind()));
      continue;
    }
    if (const auto* cmc = std::get_if<CmcMeta>(&rec->body)) {
      Channel channel = *doc.subcorpus.channel();
      if (cmc->channel && *cmc->channel != channel)
        report.add(Severity::kError, "RecordKindMismatch", doc.doc_id,
                   "record '" + rec->id + "' is for channel " + channel_name(*cmc->channel));
      if (channel == Channel::kCmcAsynchronous) {
        if (!cmc->url)
          report.add(Severity::kError, "MissingUrl", rec->id, "asynchronous CMC record lacks a url");
        const std::pair<const char*, bool> async_fields[] = {{"source_name", bool(cmc->source_name)},
                                                             {"writer", bool(cmc->writer)},
                                                             {"entry_date", bool(cmc->entry_date)}};
        for (const auto& [field, present] : async_fields)
          if (!present)
            report.add(Severity::kError, "MissingRecordField", rec->id,
                       std::string("asynchronous CMC record lacks ") + field);
      } else if (cmc->participants.empty()) {
        report.add(Severity::kError, "MissingParticipants", rec->id,
                   "synchronous CMC and non-CMC records need participants");
      }
    }
  }

  for (const auto& rec : catalog.records())
    for (const auto& sid : rec.sentence_ids())
      if (!sentences.contains(sid))
        report.add(Severity::kError, "DanglingSentenceRef", rec.id,
                   "sentence '" + sid + "' is not in the corpus");

  for (const auto& [rec_id, docs] : referrers)
    if (docs.size() > 1)
      report.add(Severity::kWarning, "SharedCatalogRecord", rec_id,
                 "catalogues " + std::to_string(docs.size()) + " documents");

  for (const auto& branch : branches) {
    std::size_t n = catalog.descriptive_for(branch).size();
    if (n == 0)
      report.add(Severity::kWarning, "MissingDescriptiveRecord", branch.str(),
                 "subcorpus has no descriptive record");
    else if (n > 1)
      report.add(Severity::kError, "DuplicateDescriptiveRecord", branch.str(),
                 std::to_string(n) + " descriptive records for one subcorpus");
  }
  return report;
}

// -- general metadata -----------------------------------------------------

std::string document_path(const Document& doc) {
  return std::string(to_string(doc.subcorpus.mode())) + "/" + doc.doc_id + ".tsv";
}

std::string catalog_path(const SubcorpusPath& path) {
  return std::string(to_string(path.mode())) + "/catalog-" + path.branch_name() + ".json";
}

std::string descriptive_path(const SubcorpusPath& path) {
  return std::string(to_string(path.mode())) + "/descriptive-" + path.branch_name() + ".json";
}

GeneralMeta build_general_meta(const Corpus& corpus, const Catalog& catalog) {
  ValidationReport report = validate_catalog(corpus, catalog);
  if (report.has_errors()) throw CatalogInvalid(report.summary());

  GeneralMeta meta;
  meta.stats = compute_stats(corpus);
  std::set<std::string> links;
  // A record shared by several documents is filed with the first of them.
  std::map<std::string, SubcorpusPath> home;
  for (const auto& doc : corpus.documents) {
    meta.locations[doc.subcorpus.str()] = to_string(doc.subcorpus.mode());
    links.insert(document_path(doc));
    auto [it, _] = home.emplace(doc.metadata_ref, doc.subcorpus);
    links.insert(catalog_path(it->second));
    if (!catalog.descriptive_for(doc.subcorpus).empty()) links.insert(descriptive_path(doc.subcorpus));
  }
  meta.links.assign(links.begin(), links.end());
  return meta;
}

json to_json(const CorpusStats& stats) {
  json by_mode = json::object();
  for (const auto& [mode, c] : stats.by_mode)
    by_mode[to_string(mode)] = {{"word_count", c.words}, {"sentence_count", c.sentences}};
  return {{"word_count", stats.word_count},
          {"sentence_count", stats.sentence_count},
          {"by_mode", by_mode}};
}

json to_json(const GeneralMeta& meta) {
  return {{"kind", "general"},
          {"locations", meta.locations},
          {"stats", to_json(meta.stats)},
          {"links", meta.links}};
}

}  // namespace ann
