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

#include "ann/workspace.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ann/error.hpp"
#include "ann/serialization.hpp"

namespace ann {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("IoError", "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("IoError", "short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

Workspace::Workspace(std::shared_ptr<const Tagset> tagset) : store_(std::move(tagset)) {}

std::unique_ptr<Workspace> Workspace::open(const fs::path& root, std::shared_ptr<const Tagset> tagset,
                                           bool write_through) {
  auto ws = std::make_unique<Workspace>(std::move(tagset));
  ws->root_ = root;
  fs::create_directories(root);
  ws->load();
  if (write_through) {
    Workspace* self = ws.get();
    ws->store_.set_observer([self](const Document& doc) { self->save_document(doc); });
  }
  return ws;
}

void Workspace::load() {
  const fs::path& root = *root_;
  for (Mode mode : {Mode::kIndirectWritten, Mode::kDirectWritten, Mode::kSpoken}) {
    fs::path dir = root / to_string(mode);
    if (!fs::is_directory(dir)) continue;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
      std::string name = file.filename().string();
      if (file.extension() == ".tsv") {
        Document doc = import_tsv(read_file(file), tagset());
        if (doc.subcorpus.mode() != mode)
          throw InvalidValue(file.string(), "document subcorpus does not match its directory");
        store_.add_document(std::move(doc));
      } else if (name.starts_with("catalog-") && file.extension() == ".json") {
        json j = json::parse(read_file(file));
        for (const auto& r : j.at("records")) catalog_.add(record_from_json(r));
      } else if (name.starts_with("descriptive-") && file.extension() == ".json") {
        catalog_.add(record_from_json(json::parse(read_file(file))));
      }
    }
  }
  fs::path unassigned = root / kUnassignedCatalogFile;
  if (fs::exists(unassigned)) {
    json j = json::parse(read_file(unassigned));
    for (const auto& r : j.at("records")) catalog_.add(record_from_json(r));
  }
}

Catalog Workspace::catalog() const {
  std::lock_guard lock(catalog_mutex_);
  return catalog_;
}

void Workspace::update_catalog(const std::function<void(Catalog&)>& fn) {
  {
    std::lock_guard lock(catalog_mutex_);
    Catalog copy = catalog_;
    fn(copy);
    catalog_ = std::move(copy);
  }
  if (root_) save_metadata();
}

Document Workspace::ingest_file(const fs::path& file, const SubcorpusPath& subcorpus,
                                std::optional<std::string> doc_id, SentenceSplitter splitter) {
  std::string id = doc_id.value_or(file.stem().string());
  return store_.ingest(read_file(file), id, subcorpus, splitter);
}

void Workspace::save_document(const Document& doc) const {
  if (!root_) return;
  write_file_atomic(*root_ / document_path(doc), export_tsv(doc, tagset()));
}

void Workspace::save_all() {
  if (!root_) return;
  for (const auto& doc : store_.snapshot().documents) save_document(doc);
  save_metadata();
}

bool Workspace::save_metadata() {
  if (!root_) return false;
  Corpus corpus = store_.snapshot();
  Catalog catalog = this->catalog();

  // Cataloguing records live with the branch of the first document (by id)
  // that points at them.
  std::map<std::string, SubcorpusPath> home;
  for (const auto& doc : corpus.documents)
    if (!doc.metadata_ref.empty()) home.emplace(doc.metadata_ref, doc.subcorpus);

  std::map<SubcorpusPath, json> catalogs;
  json unassigned = json::array();
  std::set<std::string> written;
  for (const auto& rec : catalog.records()) {
    if (const auto* d = std::get_if<DescriptiveMeta>(&rec.body)) {
      write_file_atomic(*root_ / descriptive_path(d->subcorpus), to_json(rec).dump(2) + "\n");
      written.insert(descriptive_path(d->subcorpus));
      continue;
    }
    auto it = home.find(rec.id);
    if (it == home.end()) {
      unassigned.push_back(to_json(rec));
    } else {
      json& file = catalogs[it->second];
      if (file.is_null()) file = {{"kind", "catalog"}, {"subcorpus", it->second.str()}, {"records", json::array()}};
      file["records"].push_back(to_json(rec));
    }
  }
  for (const auto& [path, file] : catalogs) {
    write_file_atomic(*root_ / catalog_path(path), file.dump(2) + "\n");
    written.insert(catalog_path(path));
  }
  // Drop stale metadata files of branches that no longer have records.
  for (Mode mode : {Mode::kIndirectWritten, Mode::kDirectWritten, Mode::kSpoken}) {
    fs::path dir = *root_ / to_string(mode);
    if (!fs::is_directory(dir)) continue;
    for (const auto& entry : fs::directory_iterator(dir)) {
      std::string name = entry.path().filename().string();
      std::string rel = std::string(to_string(mode)) + "/" + name;
      if (entry.path().extension() == ".json" &&
          (name.starts_with("catalog-") || name.starts_with("descriptive-")) && !written.contains(rel))
        fs::remove(entry.path());
    }
  }
  if (unassigned.empty()) {
    fs::remove(*root_ / kUnassignedCatalogFile);
  } else {
    write_file_atomic(*root_ / kUnassignedCatalogFile,
                      json{{"kind", "catalog"}, {"records", unassigned}}.dump(2) + "\n");
  }

  try {
    GeneralMeta meta = build_general_meta(corpus, catalog);
    write_file_atomic(*root_ / kGeneralMetaFile, to_json(meta).dump(2) + "\n");
    return true;
  } catch (const CatalogInvalid&) {
    return false;
  }
}

}  // namespace ann
