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

#include "ann/store.hpp"

#include <unordered_set>

#include "ann/error.hpp"

namespace ann {

CorpusStore::CorpusStore(std::shared_ptr<const Tagset> tagset) : tagset_(std::move(tagset)) {}

void CorpusStore::set_observer(Observer observer) {
  std::unique_lock lock(index_mutex_);
  observer_ = std::move(observer);
}

void CorpusStore::notify(const Document& doc) const {
  if (observer_) observer_(doc);
}

Document CorpusStore::ingest(std::string_view raw, const std::string& doc_id,
                             const SubcorpusPath& subcorpus, SentenceSplitter splitter) {
  if (contains(doc_id)) throw DuplicateDocument(doc_id);
  Document doc = make_document(raw, doc_id, subcorpus, splitter);
  add_document(doc);
  return doc;
}

void CorpusStore::add_document(Document doc) {
  if (!is_valid_doc_id(doc.doc_id))
    throw InvalidValue("doc_id", "'" + doc.doc_id + "' is not a valid document id");
  std::unique_lock lock(index_mutex_);
  if (docs_.contains(doc.doc_id)) throw DuplicateDocument(doc.doc_id);
  std::unordered_set<std::string_view> seen;
  for (const auto& s : doc.sentences) {
    if (sentence_index_.contains(s.id) || !seen.insert(s.id).second) throw DuplicateSentence(s.id);
  }
  for (const auto& s : doc.sentences) sentence_index_.emplace(s.id, doc.doc_id);
  auto slot = std::make_shared<Slot>();
  slot->doc = std::move(doc);
  docs_.emplace(slot->doc.doc_id, slot);
  std::lock_guard doc_lock(slot->mutex);
  notify(slot->doc);
}

bool CorpusStore::contains(std::string_view doc_id) const {
  std::shared_lock lock(index_mutex_);
  return docs_.find(doc_id) != docs_.end();
}

std::size_t CorpusStore::size() const {
  std::shared_lock lock(index_mutex_);
  return docs_.size();
}

std::vector<std::string> CorpusStore::document_ids() const {
  std::shared_lock lock(index_mutex_);
  std::vector<std::string> out;
  out.reserve(docs_.size());
  for (const auto& [id, _] : docs_) out.push_back(id);
  return out;
}

std::vector<std::string> CorpusStore::sentence_ids() const {
  std::shared_lock lock(index_mutex_);
  std::vector<std::string> out;
  out.reserve(sentence_index_.size());
  for (const auto& [sid, _] : sentence_index_) out.push_back(sid);
  return out;
}

std::shared_ptr<CorpusStore::Slot> CorpusStore::slot(std::string_view doc_id) const {
  std::shared_lock lock(index_mutex_);
  auto it = docs_.find(doc_id);
  if (it == docs_.end()) throw UnknownDocument(std::string(doc_id));
  return it->second;
}

std::shared_ptr<CorpusStore::Slot> CorpusStore::slot_for_sentence(std::string_view sentence_id) const {
  std::shared_lock lock(index_mutex_);
  auto sit = sentence_index_.find(std::string(sentence_id));
  if (sit == sentence_index_.end()) throw UnknownSentence(std::string(sentence_id));
  return docs_.find(sit->second)->second;
}

Document CorpusStore::document(std::string_view doc_id) const {
  auto s = slot(doc_id);
  std::lock_guard lock(s->mutex);
  return s->doc;
}

std::string CorpusStore::document_of(std::string_view sentence_id) const {
  std::shared_lock lock(index_mutex_);
  auto it = sentence_index_.find(std::string(sentence_id));
  if (it == sentence_index_.end()) throw UnknownSentence(std::string(sentence_id));
  return it->second;
}

Sentence CorpusStore::sentence(std::string_view sentence_id) const {
  auto s = slot_for_sentence(sentence_id);
  std::lock_guard lock(s->mutex);
  for (const auto& sent : s->doc.sentences)
    if (sent.id == sentence_id) return sent;
  throw UnknownSentence(std::string(sentence_id));
}

Sentence CorpusStore::update_sentence(std::string_view sentence_id,
                                      const std::function<void(Sentence&)>& fn) {
  auto s = slot_for_sentence(sentence_id);
  std::lock_guard lock(s->mutex);
  for (auto& sent : s->doc.sentences) {
    if (sent.id != sentence_id) continue;
    fn(sent);
    Sentence copy = sent;
    notify(s->doc);
    return copy;
  }
  throw UnknownSentence(std::string(sentence_id));
}

Sentence CorpusStore::set_tag(std::string_view sentence_id, std::size_t index,
                              std::string_view leaf_label, Provenance provenance) {
  TagAssignment tag = tagset_->assign_label(leaf_label, provenance);
  return update_sentence(sentence_id, [&](Sentence& s) { apply_tag(s, index, tag); });
}

Token CorpusStore::confirm_suggestion(std::string_view sentence_id, std::size_t index) {
  Sentence s = update_sentence(sentence_id, [&](Sentence& s) { confirm_token(s, index); });
  return s.tokens[index];
}

Sentence CorpusStore::confirm_all(std::string_view sentence_id) {
  return update_sentence(sentence_id, [](Sentence& s) { ann::confirm_all(s); });
}

Sentence CorpusStore::clear_suggestion(std::string_view sentence_id, std::size_t index) {
  return update_sentence(sentence_id, [&](Sentence& s) { ann::clear_suggestion(s, index); });
}

Sentence CorpusStore::clear_tags(std::string_view sentence_id) {
  return update_sentence(sentence_id, [](Sentence& s) { ann::clear_tags(s); });
}

void CorpusStore::set_metadata_ref(std::string_view doc_id, std::string record_id) {
  update_document(doc_id, [&](Document& d) { d.metadata_ref = std::move(record_id); });
}

Document CorpusStore::update_document(std::string_view doc_id,
                                      const std::function<void(Document&)>& fn) {
  auto s = slot(doc_id);
  std::lock_guard lock(s->mutex);
  fn(s->doc);
  notify(s->doc);
  return s->doc;
}

Corpus CorpusStore::snapshot() const {
  std::shared_lock lock(index_mutex_);
  // Lock in map order; writers only ever hold one document lock.
  std::vector<std::unique_lock<std::mutex>> locks;
  locks.reserve(docs_.size());
  for (const auto& [_, s] : docs_) locks.emplace_back(s->mutex);
  Corpus corpus;
  corpus.documents.reserve(docs_.size());
  for (const auto& [_, s] : docs_) corpus.documents.push_back(s->doc);
  return corpus;
}

}  // namespace ann
