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

// On-disk corpus directory:
//
//   <root>/corpus-meta.json                     general metadata (derived)
//   <root>/catalog-unassigned.json              records no document points at
//   <root>/<mode>/<doc_id>.tsv                  one canonical TSV per document
//   <root>/<mode>/catalog-<branch>.json         cataloguing records
//   <root>/<mode>/descriptive-<branch>.json     descriptive record

#ifndef ANN_WORKSPACE_HPP_
#define ANN_WORKSPACE_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ann/metadata.hpp"
#include "ann/store.hpp"

namespace ann {

class Workspace {
 public:
  /// An in-memory workspace; nothing is written anywhere.
  explicit Workspace(std::shared_ptr<const Tagset> tagset);

  /// Loads `root` (creating it if missing). With `write_through`, every
  /// document mutation is immediately saved to its TSV file.
  static std::unique_ptr<Workspace> open(const std::filesystem::path& root,
                                         std::shared_ptr<const Tagset> tagset,
                                         bool write_through = true);

  CorpusStore& store() { return store_; }
  const CorpusStore& store() const { return store_; }
  const Tagset& tagset() const { return store_.tagset(); }
  const std::optional<std::filesystem::path>& root() const { return root_; }

  Catalog catalog() const;
  /// Runs `fn` on the catalog under its lock, then persists metadata.
  void update_catalog(const std::function<void(Catalog&)>& fn);

  /// Reads a raw UTF-8 text file; doc_id defaults to the file stem.
  Document ingest_file(const std::filesystem::path& file, const SubcorpusPath& subcorpus,
                       std::optional<std::string> doc_id = std::nullopt,
                       SentenceSplitter splitter = {});

  /// Writes every document and metadata file.
  void save_all();
  void save_document(const Document& doc) const;
  /// Writes catalog and descriptive files, and corpus-meta.json when the
  /// catalog validates. Returns false if corpus-meta.json was not written.
  bool save_metadata();

 private:
  void load();

  std::optional<std::filesystem::path> root_;
  CorpusStore store_;
  mutable std::mutex catalog_mutex_;
  Catalog catalog_;
};

std::string read_file(const std::filesystem::path& path);
/// Writes via a temporary file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ann

#endif  // ANN_WORKSPACE_HPP_
