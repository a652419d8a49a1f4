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

#include "ann/service.hpp"

#include <charconv>

#include <httplib.h>

#include "ann/error.hpp"
#include "ann/metadata.hpp"
#include "ann/serialization.hpp"
#include "ann/text.hpp"

namespace ann {

using nlohmann::json;

// -- annotators -------------------------------------------------------------

AnnotatorRegistry AnnotatorRegistry::parse(std::string_view text) {
  AnnotatorRegistry reg;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto cols = split(t, '\t');
    if (cols.size() != 3) throw ParseError(line_no, "expected annotator_id, display_name and token");
    Annotator a{std::string(trim(cols[0])), std::string(trim(cols[1])), std::string(trim(cols[2]))};
    if (a.annotator_id.empty() || a.token.empty()) throw ParseError(line_no, "empty annotator id or token");
    try {
      reg.add(std::move(a));
    } catch (const InvalidValue& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return reg;
}

AnnotatorRegistry AnnotatorRegistry::load_file(const std::filesystem::path& path) {
  return parse(read_file(path));
}

void AnnotatorRegistry::add(Annotator annotator) {
  if (by_id_.contains(annotator.annotator_id))
    throw InvalidValue("annotator_id", "duplicate annotator '" + annotator.annotator_id + "'");
  if (id_by_token_.contains(annotator.token))
    throw InvalidValue("token", "token of '" + annotator.annotator_id + "' is already in use");
  id_by_token_.emplace(annotator.token, annotator.annotator_id);
  std::string id = annotator.annotator_id;
  by_id_.emplace(std::move(id), std::move(annotator));
}

const Annotator* AnnotatorRegistry::find_by_token(std::string_view token) const {
  auto it = id_by_token_.find(token);
  return it == id_by_token_.end() ? nullptr : find(it->second);
}

const Annotator* AnnotatorRegistry::find(std::string_view annotator_id) const {
  auto it = by_id_.find(annotator_id);
  return it == by_id_.end() ? nullptr : &it->second;
}

// -- claims -----------------------------------------------------------------

const char* to_string(ClaimState s) {
  switch (s) {
    case ClaimState::kActive: return "active";
    case ClaimState::kReleased: return "released";
    case ClaimState::kFinished: return "finished";
  }
  return "active";
}

ClaimRegistry::ClaimRegistry(std::chrono::minutes idle_timeout, Clock clock)
    : idle_timeout_(idle_timeout), clock_(std::move(clock)) {}

bool ClaimRegistry::is_live(const Claim& c) const {
  return c.state == ClaimState::kActive && clock_() - c.last_activity <= idle_timeout_;
}

ClaimRegistry::Result ClaimRegistry::claim(const std::string& doc_id, const std::string& annotator_id) {
  std::lock_guard lock(mutex_);
  auto now = clock_();
  auto it = claims_.find(doc_id);
  if (it != claims_.end() && is_live(it->second)) {
    if (it->second.annotator_id != annotator_id) return {false, it->second};
    it->second.last_activity = now;
    return {true, it->second};
  }
  Claim c{doc_id, annotator_id, now, now, ClaimState::kActive};
  claims_[doc_id] = c;
  return {true, c};
}

bool ClaimRegistry::release(const std::string& doc_id, const std::string& annotator_id, bool finished) {
  std::lock_guard lock(mutex_);
  auto it = claims_.find(doc_id);
  if (it == claims_.end() || !is_live(it->second) || it->second.annotator_id != annotator_id) return false;
  it->second.state = finished ? ClaimState::kFinished : ClaimState::kReleased;
  it->second.last_activity = clock_();
  return true;
}

bool ClaimRegistry::touch(const std::string& doc_id, const std::string& annotator_id) {
  std::lock_guard lock(mutex_);
  auto it = claims_.find(doc_id);
  if (it == claims_.end() || !is_live(it->second) || it->second.annotator_id != annotator_id) return false;
  it->second.last_activity = clock_();
  return true;
}

std::optional<Claim> ClaimRegistry::current(const std::string& doc_id) const {
  std::lock_guard lock(mutex_);
  auto it = claims_.find(doc_id);
  if (it == claims_.end()) return std::nullopt;
  Claim c = it->second;
  if (c.state == ClaimState::kActive && !is_live(c)) c.state = ClaimState::kReleased;
  return c;
}

// -- JSON views -------------------------------------------------------------

Progress progress(const Document& doc) {
  Progress p;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.tokens) {
      ++p.total_tokens;
      if (!t.tag) ++p.untagged;
      else if (t.is_manual()) ++p.manual;
      else ++p.automatic;
    }
  }
  return p;
}

json to_json(const Progress& p) {
  return {{"total_tokens", p.total_tokens}, {"manual", p.manual}, {"auto", p.automatic},
          {"untagged", p.untagged}};
}

namespace {

json node_json(const Tagset& tagset, const TagNode& node) {
  json children = json::array();
  for (const TagNode* c : tagset.list_children(node)) children.push_back(node_json(tagset, *c));
  return {{"label", node.label},       {"name", node.name},
          {"convention", node.convention}, {"examples", node.examples},
          {"leaf", node.children.empty()}, {"children", std::move(children)}};
}

std::string iso8601(Claim::TimePoint t) {
  std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json claim_json(const Claim& c) {
  return {{"doc_id", c.doc_id},
          {"annotator_id", c.annotator_id},
          {"claimed_at", iso8601(c.claimed_at)},
          {"state", to_string(c.state)}};
}

}  // namespace

json tagset_tree_json(const Tagset& tagset) {
  json top = json::array();
  for (const TagNode* n : tagset.top_level()) top.push_back(node_json(tagset, *n));
  return {{"version", tagset.version()}, {"categories", std::move(top)}};
}

json sentence_json(const Sentence& sentence) {
  json tokens = json::array();
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    json tok = {{"index", i}, {"surface", t.surface}, {"span", {t.span.begin, t.span.end}}};
    if (t.tag) {
      tok["tag"] = t.tag->convention;
      tok["leaf_label"] = t.tag->leaf_label;
      tok["provenance"] = to_string(t.tag->provenance);
      tok["is_leaf"] = t.tag->is_leaf;
    } else {
      tok["tag"] = nullptr;
    }
    tokens.push_back(std::move(tok));
  }
  return {{"id", sentence.id}, {"text", sentence.text}, {"status", to_string(sentence.status)},
          {"tokens", std::move(tokens)}};
}

// -- HTTP -------------------------------------------------------------------

namespace {

// An HTTP-level failure raised inside a handler.
struct HttpError {
  int status;
  std::string kind;
  std::string message;
  json extra = json::object();
};

int status_for(const std::string& kind) {
  if (kind == "UnknownDocument" || kind == "UnknownSentence") return 404;
  if (kind == "DuplicateDocument" || kind == "DuplicateSentence" || kind == "CatalogInvalid") return 409;
  if (kind == "IoError") return 500;
  return 422;
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, int status, const std::string& kind, const std::string& message,
                json extra = json::object()) {
  json body = {{"error", kind}, {"message", message}};
  body.update(extra);
  send_json(res, status, body);
}

std::size_t parse_index(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw IndexOutOfRange(SIZE_MAX, 0);
  return v;
}

std::size_t query_size(const httplib::Request& req, const char* key, std::size_t fallback) {
  if (!req.has_param(key)) return fallback;
  std::string v = req.get_param_value(key);
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw HttpError{400, "BadRequest", std::string(key) + " must be a non-negative integer"};
  return out;
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw HttpError{400, "BadRequest", std::string("malformed JSON body: ") + e.what()};
  }
}

AutotagPolicy parse_policy(const json& j) {
  AutotagPolicy policy;
  if (j.is_null()) return policy;
  if (!j.is_object()) throw InvalidValue("policy", "must be an object");
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) throw InvalidValue("policy.mode", "must be a string");
    auto m = parse_policy_mode(j["mode"].get<std::string>());
    if (!m) throw InvalidValue("policy.mode", "expected unambiguous_only or most_frequent");
    policy.mode = *m;
  }
  if (j.contains("min_count")) {
    if (!j["min_count"].is_number_unsigned() || j["min_count"].get<std::size_t>() == 0)
      throw InvalidValue("policy.min_count", "must be a positive integer");
    policy.min_count = j["min_count"].get<std::size_t>();
  }
  return policy;
}

}  // namespace

struct AnnotationService::Impl {
  httplib::Server server;
  int port = -1;
};

AnnotationService::AnnotationService(Workspace& workspace, AnnotatorRegistry annotators,
                                     AutotagLexicon initial_lexicon, ServiceOptions options)
    : workspace_(workspace),
      annotators_(std::move(annotators)),
      claims_(options.idle_timeout, options.clock),
      lexicon_(std::make_shared<const AutotagLexicon>(std::move(initial_lexicon))),
      impl_(std::make_unique<Impl>()) {
  httplib::Server& srv = impl_->server;
  CorpusStore& store = workspace_.store();

  // Wraps a handler so that library and HTTP errors become JSON bodies.
  auto route = [](auto fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
      try {
        fn(req, res);
      } catch (const HttpError& e) {
        send_error(res, e.status, e.kind, e.message, e.extra);
      } catch (const MissingField& e) {
        send_error(res, 422, e.kind(), e.what(), {{"fields", e.fields()}});
      } catch (const Error& e) {
        send_error(res, status_for(e.kind()), e.kind(), e.what());
      } catch (const json::exception& e) {
        send_error(res, 400, "BadRequest", e.what());
      } catch (const std::exception& e) {
        send_error(res, 500, "InternalError", e.what());
      }
    };
  };

  // Authenticates, checks the document exists, then checks the claim.
  auto authorize = [this, &store](const httplib::Request& req, const std::string& doc_id) -> const Annotator& {
    const std::string auth = req.get_header_value("Authorization");
    const Annotator* who = nullptr;
    if (auth.starts_with("Bearer ")) who = annotators_.find_by_token(trim(std::string_view(auth).substr(7)));
    if (!who) throw HttpError{401, "Unauthorized", "missing or invalid bearer token"};
    if (!store.contains(doc_id)) throw UnknownDocument(doc_id);
    if (!claims_.touch(doc_id, who->annotator_id)) {
      json extra = json::object();
      if (auto c = claims_.current(doc_id); c && c->state == ClaimState::kActive)
        extra["holder"] = c->annotator_id;
      throw HttpError{409, "ClaimRequired",
                      "annotator '" + who->annotator_id + "' holds no active claim on '" + doc_id + "'", extra};
    }
    return *who;
  };
  auto authenticate = [this](const httplib::Request& req) -> const Annotator& {
    const std::string auth = req.get_header_value("Authorization");
    const Annotator* who = nullptr;
    if (auth.starts_with("Bearer ")) who = annotators_.find_by_token(trim(std::string_view(auth).substr(7)));
    if (!who) throw HttpError{401, "Unauthorized", "missing or invalid bearer token"};
    return *who;
  };
  auto doc_of_sentence = [&store](const std::string& sid) {
    return store.document_of(sid);  // UnknownSentence -> 404
  };

  // -- reads --

  srv.Get("/tagset", route([this](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, tagset_tree_json(workspace_.tagset()));
  }));

  srv.Get("/documents", route([this, &store](const httplib::Request& req, httplib::Response& res) {
    std::optional<SentenceStatus> want;
    if (req.has_param("status")) {
      want = parse_status(req.get_param_value("status"));
      if (!want) throw HttpError{400, "BadRequest", "unknown status '" + req.get_param_value("status") + "'"};
    }
    json out = json::array();
    for (const auto& id : store.document_ids()) {
      Document doc;
      try {
        doc = store.document(id);
      } catch (const UnknownDocument&) {
        continue;
      }
      SentenceStatus st = document_status(doc);
      if (want && st != *want) continue;
      json d = {{"doc_id", doc.doc_id},          {"subcorpus", doc.subcorpus.str()},
                {"status", to_string(st)},       {"sentences", doc.sentences.size()},
                {"metadata_ref", doc.metadata_ref}, {"progress", to_json(progress(doc))}};
      auto c = claims_.current(id);
      d["claim"] = c ? claim_json(*c) : json(nullptr);
      out.push_back(std::move(d));
    }
    send_json(res, 200, {{"documents", std::move(out)}});
  }));

  srv.Get(R"(/documents/([^/]+)/sentences)",
          route([&store](const httplib::Request& req, httplib::Response& res) {
            Document doc = store.document(req.matches[1].str());
            std::size_t from = query_size(req, "from", 0);
            std::size_t limit = query_size(req, "limit", doc.sentences.size());
            json sentences = json::array();
            for (std::size_t i = from; i < doc.sentences.size() && i - from < limit; ++i)
              sentences.push_back(sentence_json(doc.sentences[i]));
            send_json(res, 200,
                      {{"doc_id", doc.doc_id}, {"total", doc.sentences.size()}, {"from", from},
                       {"sentences", std::move(sentences)}});
          }));

  srv.Get(R"(/documents/([^/]+)/progress)",
          route([&store](const httplib::Request& req, httplib::Response& res) {
            Document doc = store.document(req.matches[1].str());
            json body = to_json(progress(doc));
            body["doc_id"] = doc.doc_id;
            send_json(res, 200, body);
          }));

  srv.Get(R"(/documents/([^/]+))", route([this, &store](const httplib::Request& req, httplib::Response& res) {
            Document doc = store.document(req.matches[1].str());
            json d = {{"doc_id", doc.doc_id},
                      {"subcorpus", doc.subcorpus.str()},
                      {"status", to_string(document_status(doc))},
                      {"sentences", doc.sentences.size()},
                      {"metadata_ref", doc.metadata_ref},
                      {"progress", to_json(progress(doc))}};
            auto c = claims_.current(doc.doc_id);
            d["claim"] = c ? claim_json(*c) : json(nullptr);
            send_json(res, 200, d);
          }));

  srv.Get("/suggest", route([this](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("form")) throw HttpError{400, "BadRequest", "missing form parameter"};
    std::string form = req.get_param_value("form");
    json pol = json::object();
    if (req.has_param("mode")) pol["mode"] = req.get_param_value("mode");
    if (req.has_param("min_count")) pol["min_count"] = query_size(req, "min_count", 1);
    AutotagPolicy policy = parse_policy(pol);
    auto lex = this->lexicon();
    json candidates = json::object();
    if (auto it = lex->entries.find(form); it != lex->entries.end())
      for (const auto& [tag, n] : it->second) candidates[tag] = n;
    auto s = suggest(*lex, form, policy);
    send_json(res, 200,
              {{"form", form}, {"suggestion", s ? json(*s) : json(nullptr)}, {"candidates", candidates},
               {"policy", {{"mode", to_string(policy.mode)}, {"min_count", policy.min_count}}}});
  }));

  srv.Get("/stats", route([&store](const httplib::Request&, httplib::Response& res) {
    send_json(res, 200, to_json(compute_stats(store.snapshot())));
  }));

  srv.Get("/export", route([this, &store](const httplib::Request& req, httplib::Response& res) {
    std::string format = req.has_param("format") ? req.get_param_value("format") : "xml";
    if (format == "xml") {
      Corpus corpus = store.snapshot();
      if (req.has_param("doc")) {
        Document doc = store.document(req.get_param_value("doc"));
        corpus.documents = {doc};
      }
      res.set_content(export_xml(corpus, workspace_.catalog(), workspace_.tagset()),
                      "application/xml; charset=utf-8");
    } else if (format == "tsv") {
      std::string out;
      if (req.has_param("doc")) {
        out = export_tsv(store.document(req.get_param_value("doc")), workspace_.tagset());
      } else {
        for (const auto& doc : store.snapshot().documents) {
          if (!out.empty()) out += '\n';
          out += export_tsv(doc, workspace_.tagset());
        }
      }
      res.set_content(out, "text/tab-separated-values; charset=utf-8");
    } else {
      throw HttpError{400, "BadRequest", "format must be xml or tsv"};
    }
  }));

  srv.Get("/catalog/validate", route([this, &store](const httplib::Request&, httplib::Response& res) {
    ValidationReport report = validate_catalog(store.snapshot(), workspace_.catalog());
    json findings = json::array();
    for (const auto& f : report.findings)
      findings.push_back({{"severity", to_string(f.severity)}, {"code", f.code}, {"subject", f.subject},
                          {"message", f.message}});
    send_json(res, 200, {{"valid", !report.has_errors()}, {"findings", std::move(findings)}});
  }));

  // -- claims --

  srv.Post(R"(/documents/([^/]+)/claim)",
           route([this, &store, authenticate](const httplib::Request& req, httplib::Response& res) {
             const Annotator& who = authenticate(req);
             std::string doc_id = req.matches[1].str();
             if (!store.contains(doc_id)) throw UnknownDocument(doc_id);
             auto result = claims_.claim(doc_id, who.annotator_id);
             if (!result.granted)
               throw HttpError{409, "ClaimConflict", "document '" + doc_id + "' is claimed by another annotator",
                               {{"holder", result.claim.annotator_id}}};
             send_json(res, 200, claim_json(result.claim));
           }));

  srv.Post(R"(/documents/([^/]+)/release)",
           route([this, &store, authenticate](const httplib::Request& req, httplib::Response& res) {
             const Annotator& who = authenticate(req);
             std::string doc_id = req.matches[1].str();
             Document doc = store.document(doc_id);
             bool finished = document_status(doc) == SentenceStatus::kComplete;
             if (!claims_.release(doc_id, who.annotator_id, finished))
               throw HttpError{409, "ClaimRequired",
                               "annotator '" + who.annotator_id + "' holds no active claim on '" + doc_id + "'"};
             send_json(res, 200, claim_json(*claims_.current(doc_id)));
           }));

  // -- token writes --

  srv.Put(R"(/sentences/([^/]+)/tokens/([^/]+)/tag)",
          route([&store, authenticate, authorize, doc_of_sentence](const httplib::Request& req, httplib::Response& res) {
            std::string sid = req.matches[1].str();
            authenticate(req);
            authorize(req, doc_of_sentence(sid));
            json body = parse_body(req);
            if (!body.contains("leaf_label") || !body["leaf_label"].is_string())
              throw MissingField({"leaf_label"});
            std::size_t index = parse_index(req.matches[2].str());
            Sentence s = store.set_tag(sid, index, body["leaf_label"].get<std::string>(), Provenance::kManual);
            send_json(res, 200, {{"sentence_id", sid}, {"index", index},
                                 {"token", sentence_json(s)["tokens"][index]}, {"status", to_string(s.status)}});
          }));

  srv.Delete(R"(/sentences/([^/]+)/tokens/([^/]+)/tag)",
             route([&store, authenticate, authorize, doc_of_sentence](const httplib::Request& req, httplib::Response& res) {
               std::string sid = req.matches[1].str();
               authenticate(req);
               authorize(req, doc_of_sentence(sid));
               std::size_t index = parse_index(req.matches[2].str());
               Sentence s = store.clear_suggestion(sid, index);
               send_json(res, 200, {{"sentence_id", sid}, {"index", index},
                                    {"token", sentence_json(s)["tokens"][index]}, {"status", to_string(s.status)}});
             }));

  srv.Post(R"(/sentences/([^/]+)/tokens/([^/]+)/confirm)",
           route([&store, authenticate, authorize, doc_of_sentence](const httplib::Request& req, httplib::Response& res) {
             std::string sid = req.matches[1].str();
             authenticate(req);
             authorize(req, doc_of_sentence(sid));
             std::size_t index = parse_index(req.matches[2].str());
             store.confirm_suggestion(sid, index);
             Sentence s = store.sentence(sid);
             send_json(res, 200, {{"sentence_id", sid}, {"index", index},
                                  {"token", sentence_json(s)["tokens"][index]}, {"status", to_string(s.status)}});
           }));

  srv.Post(R"(/sentences/([^/]+)/confirm-all)",
           route([&store, authenticate, authorize, doc_of_sentence](const httplib::Request& req, httplib::Response& res) {
             std::string sid = req.matches[1].str();
             authenticate(req);
             authorize(req, doc_of_sentence(sid));
             std::size_t confirmed = 0;
             Sentence s = [&] {
               Sentence before = store.sentence(sid);
               for (const auto& t : before.tokens) confirmed += t.is_suggestion() ? 1 : 0;
               return store.confirm_all(sid);
             }();
             send_json(res, 200, {{"confirmed", confirmed}, {"sentence", sentence_json(s)}});
           }));

  // -- document writes --

  srv.Post(R"(/autotag/([^/]+))",
           route([this, &store, authorize](const httplib::Request& req, httplib::Response& res) {
             std::string doc_id = req.matches[1].str();
             authorize(req, doc_id);
             json body = parse_body(req);
             AutotagPolicy policy = parse_policy(body.contains("policy") ? body["policy"] : json());
             auto lex = this->lexicon();
             std::size_t suggested = 0;
             Document doc = store.update_document(doc_id, [&](Document& d) {
               suggested = autotag_document(d, *lex, policy, workspace_.tagset());
             });
             send_json(res, 200, {{"doc_id", doc_id}, {"suggested", suggested},
                                  {"progress", to_json(progress(doc))}});
           }));

  srv.Post(R"(/documents/([^/]+)/metadata)",
           route([this, &store, authorize](const httplib::Request& req, httplib::Response& res) {
             std::string doc_id = req.matches[1].str();
             authorize(req, doc_id);
             json body = parse_body(req);
             if (!body.contains("kind") || !body["kind"].is_string()) throw MissingField({"kind"});
             auto kind = parse_record_kind(body["kind"].get<std::string>());
             if (!kind) throw InvalidValue("kind", "unknown record kind");
             json fields = body.contains("fields") ? body["fields"] : json::object();
             MetadataRecord record;
             workspace_.update_catalog([&](Catalog& c) { record = c.create(*kind, fields); });
             if (*kind != RecordKind::kDescriptive) {
               store.set_metadata_ref(doc_id, record.id);
               workspace_.save_metadata();
             }
             send_json(res, 201, to_json(record));
           }));

  srv.Post("/lexicon/rebuild", route([this, &store, authenticate](const httplib::Request& req,
                                                                  httplib::Response& res) {
    authenticate(req);
    AutotagLexicon lex = build_lexicon(store.snapshot(), workspace_.tagset());
    lex.source_note = "rebuilt from the corpus store";
    std::size_t forms = lex.entries.size();
    set_lexicon(std::move(lex));
    send_json(res, 200, {{"forms", forms}});
  }));

  if (options.static_dir) srv.set_mount_point("/", options.static_dir->string());
}

AnnotationService::~AnnotationService() { stop(); }

int AnnotationService::bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
  } else {
    impl_->port = impl_->server.bind_to_port(host, port) ? port : -1;
  }
  return impl_->port;
}

bool AnnotationService::serve() { return impl_->server.listen_after_bind(); }

void AnnotationService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void AnnotationService::wait_until_ready() const { impl_->server.wait_until_ready(); }

std::shared_ptr<const AutotagLexicon> AnnotationService::lexicon() const {
  std::lock_guard lock(lexicon_mutex_);
  return lexicon_;
}

void AnnotationService::set_lexicon(AutotagLexicon lexicon) {
  auto next = std::make_shared<const AutotagLexicon>(std::move(lexicon));
  std::lock_guard lock(lexicon_mutex_);
  lexicon_ = std::move(next);
}

}  // namespace ann
