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

#ifndef ANN_STORE_HPP_
#define ANN_STORE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ann/corpus.hpp"
#include "ann/tagset.hpp"

namespace ann {

/// Thread-safe corpus container.
///
/// Mutations are serialized per document: two writers on different
/// documents run concurrently, two writers on the same document are applied
/// one after the other. snapshot() locks every document before copying, so
/// it never observes a half-applied mutation.
class CorpusStore {
 public:
  /// Called with the updated document while its lock is still held.
  using Observer = std::function<void(const Document&)>;

  explicit CorpusStore(std::shared_ptr<const Tagset> tagset);

  CorpusStore(const CorpusStore&) = delete;
  CorpusStore& operator=(const CorpusStore&) = delete;

  const Tagset& tagset() const { return *tagset_; }
  std::shared_ptr<const Tagset> tagset_ptr() const { return tagset_; }

  void set_observer(Observer observer);

  /// Throws DuplicateDocument, EncodingError.
  Document ingest(std::string_view raw, const std::string& doc_id, const SubcorpusPath& subcorpus,
                  SentenceSplitter splitter = {});
  /// Throws DuplicateDocument, or DuplicateSentence if any sentence id is taken.
  void add_document(Document doc);

  bool contains(std::string_view doc_id) const;
  std::size_t size() const;
  std::vector<std::string> document_ids() const;
  Document document(std::string_view doc_id) const;
  Sentence sentence(std::string_view sentence_id) const;
  std::string document_of(std::string_view sentence_id) const;
  /// Every sentence id currently in the store.
  std::vector<std::string> sentence_ids() const;

  /// Resolves `leaf_label` through the tagset and tags the token.
  /// Throws UnknownSentence, IndexOutOfRange, UnknownLabel.
  Sentence set_tag(std::string_view sentence_id, std::size_t index, std::string_view leaf_label,
                   Provenance provenance);
  Token confirm_suggestion(std::string_view sentence_id, std::size_t index);
  Sentence confirm_all(std::string_view sentence_id);
  Sentence clear_suggestion(std::string_view sentence_id, std::size_t index);
  Sentence clear_tags(std::string_view sentence_id);
  void set_metadata_ref(std::string_view doc_id, std::string record_id);

  /// Runs `fn` on the live document under its lock and returns a copy of the
  /// result. `fn` must not change the document id or sentence ids.
  Document update_document(std::string_view doc_id, const std::function<void(Document&)>& fn);

  Corpus snapshot() const;

 private:
  struct Slot {
    mutable std::mutex mutex;
    Document doc;
  };

  std::shared_ptr<Slot> slot(std::string_view doc_id) const;
  std::shared_ptr<Slot> slot_for_sentence(std::string_view sentence_id) const;
  Sentence update_sentence(std::string_view sentence_id, const std::function<void(Sentence&)>& fn);
  void notify(const Document& doc) const;

  std::shared_ptr<const Tagset> tagset_;
  mutable std::shared_mutex index_mutex_;
  std::map<std::string, std::shared_ptr<Slot>, std::less<>> docs_;
  std::unordered_map<std::string, std::string> sentence_index_;  // sentence id -> doc id
  Observer observer_;
};

}  // namespace ann

#endif  // ANN_STORE_HPP_
