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

// HTTP annotation service. Reads are open; every write needs a bearer token
// from the annotator registry and an active claim on the enclosing document.

#ifndef ANN_SERVICE_HPP_
#define ANN_SERVICE_HPP_

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ann/autotag.hpp"
#include "ann/corpus.hpp"
#include "ann/workspace.hpp"

namespace ann {

struct Annotator {
  std::string annotator_id;
  std::string display_name;
  std::string token;
};

class AnnotatorRegistry {
 public:
  /// Parses `annotator_id<TAB>display_name<TAB>token` lines; '#' starts a
  /// comment. Throws ParseError on bad rows, duplicate ids or tokens.
  static AnnotatorRegistry parse(std::string_view text);
  static AnnotatorRegistry load_file(const std::filesystem::path& path);

  /// Throws InvalidValue on a duplicate id or token.
  void add(Annotator annotator);
  const Annotator* find_by_token(std::string_view token) const;
  const Annotator* find(std::string_view annotator_id) const;
  std::size_t size() const { return by_id_.size(); }

 private:
  std::map<std::string, Annotator, std::less<>> by_id_;
  std::map<std::string, std::string, std::less<>> id_by_token_;
};

enum class ClaimState { kActive, kReleased, kFinished };

const char* to_string(ClaimState s);

struct Claim {
  using TimePoint = std::chrono::system_clock::time_point;

  std::string doc_id;
  std::string annotator_id;
  TimePoint claimed_at;
  TimePoint last_activity;
  ClaimState state = ClaimState::kActive;
};

/// Per-document claims. All operations are atomic under one mutex; an active
/// claim idle for longer than the timeout is treated as released.
class ClaimRegistry {
 public:
  using Clock = std::function<Claim::TimePoint()>;

  explicit ClaimRegistry(std::chrono::minutes idle_timeout = std::chrono::minutes(60),
                         Clock clock = [] { return std::chrono::system_clock::now(); });

  struct Result {
    bool granted = false;
    Claim claim;  // the new claim, or the conflicting one
  };

  /// Re-claiming a document one already holds refreshes the claim.
  Result claim(const std::string& doc_id, const std::string& annotator_id);
  /// False if `annotator_id` holds no active claim on the document.
  bool release(const std::string& doc_id, const std::string& annotator_id, bool finished = false);
  /// True if `annotator_id` holds the active claim; refreshes its activity.
  bool touch(const std::string& doc_id, const std::string& annotator_id);
  std::optional<Claim> current(const std::string& doc_id) const;

 private:
  bool is_live(const Claim& c) const;

  std::chrono::minutes idle_timeout_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::map<std::string, Claim> claims_;  // latest claim per document
};

struct Progress {
  std::size_t total_tokens = 0;
  std::size_t manual = 0;
  std::size_t automatic = 0;  // auto and suggested provenance
  std::size_t untagged = 0;

  friend bool operator==(const Progress&, const Progress&) = default;
};

Progress progress(const Document& doc);
nlohmann::json to_json(const Progress& p);

nlohmann::json tagset_tree_json(const Tagset& tagset);
nlohmann::json sentence_json(const Sentence& sentence);

struct ServiceOptions {
  std::chrono::minutes idle_timeout{60};
  ClaimRegistry::Clock clock = [] { return std::chrono::system_clock::now(); };
  /// Served at "/" when set (the workbench bundle).
  std::optional<std::filesystem::path> static_dir;
};

class AnnotationService {
 public:
  AnnotationService(Workspace& workspace, AnnotatorRegistry annotators, AutotagLexicon lexicon,
                    ServiceOptions options = {});
  ~AnnotationService();

  AnnotationService(const AnnotationService&) = delete;
  AnnotationService& operator=(const AnnotationService&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves on the bound socket until stop(); blocks.
  bool serve();
  void stop();
  void wait_until_ready() const;

  std::shared_ptr<const AutotagLexicon> lexicon() const;
  void set_lexicon(AutotagLexicon lexicon);
  ClaimRegistry& claims() { return claims_; }

 private:
  struct Impl;

  Workspace& workspace_;
  AnnotatorRegistry annotators_;
  ClaimRegistry claims_;
  mutable std::mutex lexicon_mutex_;
  std::shared_ptr<const AutotagLexicon> lexicon_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ann

#endif  // ANN_SERVICE_HPP_
