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

// Hierarchical POS tagsets.
//
// A tagset is a tree of at most three levels. Every node has a short
// uppercase label that is unique across the whole tree, so a label alone
// identifies a node and the full annotation convention ("V__VM__VF") can be
// derived from it by walking up to the root.

#ifndef ANN_TAGSET_HPP_
#define ANN_TAGSET_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ann/report.hpp"

namespace ann {

inline constexpr std::string_view kConventionSeparator = "__";
inline constexpr int kMaxTagDepth = 3;

enum class Provenance { kManual, kAuto, kSuggested };

const char* to_string(Provenance p);
/// Parses "manual" / "auto" / "suggested"; nullopt otherwise.
std::optional<Provenance> parse_provenance(std::string_view s);

struct TagNode {
  std::size_t id = 0;  // index into Tagset::nodes(), definition order
  std::string label;
  std::string name;
  std::vector<std::string> examples;
  int depth = 1;  // top-level categories have depth 1
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::string convention;
};

/// A tag as attached to a token.
struct TagAssignment {
  std::string convention;
  std::string leaf_label;
  Provenance provenance = Provenance::kManual;
  bool is_leaf = true;

  friend bool operator==(const TagAssignment&, const TagAssignment&) = default;
};

class Tagset {
 public:
  /// Parses the line-oriented definition format
  /// `depth<TAB>label<TAB>name<TAB>examples`. Lines starting with '#' are
  /// comments, except `#version <id>` which sets the version.
  static Tagset load(std::string_view definition, std::string version = {});
  static Tagset load_file(const std::filesystem::path& path);

  /// The bundled Magahi tagset, embedded at build time from data/magahi.tagset.
  static const Tagset& magahi();
  static std::string_view magahi_definition();

  const std::string& version() const { return version_; }
  std::span<const TagNode> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  std::vector<const TagNode*> top_level() const;
  std::vector<const TagNode*> list_children(const TagNode& node) const;
  bool is_leaf(const TagNode& node) const { return node.children.empty(); }
  const TagNode* parent(const TagNode& node) const;
  const TagNode& top_ancestor(const TagNode& node) const;
  std::vector<const TagNode*> leaves() const;

  const TagNode* find_label(std::string_view label) const;
  const TagNode* find_convention(std::string_view convention) const;

  /// Throws UnknownTag when the path does not name a node.
  const TagNode& parse_tag(std::string_view convention) const;
  /// Throws UnknownLabel.
  std::string derive_full_tag(std::string_view label) const;

  TagAssignment assign(std::string_view convention, Provenance provenance) const;
  TagAssignment assign_label(std::string_view label, Provenance provenance) const;

 private:
  Tagset() = default;

  std::string version_;
  std::vector<TagNode> nodes_;
  std::vector<std::size_t> roots_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
  std::map<std::string, std::size_t, std::less<>> by_convention_;
};

/// Error finding "UnknownTag" if the convention does not parse; in strict
/// mode a warning "NonLeafTag" if it names an inner node.
ValidationReport validate_assignment(const TagAssignment& assignment, const Tagset& tagset,
                                     bool strict = true);

}  // namespace ann

#endif  // ANN_TAGSET_HPP_
