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

#include "ann/tagset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ann/error.hpp"
#include "ann/text.hpp"

namespace ann {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kManual:
      return "manual";
    case Provenance::kAuto:
      return "auto";
    case Provenance::kSuggested:
      return "suggested";
  }
  return "manual";
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "manual") return Provenance::kManual;
  if (s == "auto") return Provenance::kAuto;
  if (s == "suggested") return Provenance::kSuggested;
  return std::nullopt;
}

namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

}  // namespace

Tagset Tagset::load(std::string_view definition, std::string version) {
  Tagset ts;
  ts.version_ = std::move(version);

  // path_[d-1] is the most recent node seen at depth d
  std::vector<std::size_t> path;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(definition)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kVersion = "#version ";
      if (line.starts_with(kVersion) && ts.version_.empty())
        ts.version_ = std::string(trim(line.substr(kVersion.size())));
      continue;
    }

    std::vector<std::string_view> cols = split(line, '\t');
    if (cols.size() < 3 || cols.size() > 4)
      throw MalformedDefinition(line_no, "expected 3 or 4 tab-separated columns");

    int depth = 0;
    auto [ptr, ec] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), depth);
    if (ec != std::errc() || ptr != cols[0].data() + cols[0].size() || depth < 1)
      throw MalformedDefinition(line_no, "depth must be a positive integer");
    if (depth > kMaxTagDepth) throw DepthExceeded(line_no, depth);
    if (static_cast<std::size_t>(depth) > path.size() + 1)
      throw MalformedDefinition(line_no, "node at depth " + std::to_string(depth) +
                                             " has no parent at depth " +
                                             std::to_string(depth - 1));

    std::string label(cols[1]);
    if (!valid_label(label))
      throw MalformedDefinition(line_no, "label '" + label + "' must be uppercase ASCII letters");
    if (ts.by_label_.contains(label)) throw DuplicateLabel(label);

    TagNode node;
    node.id = ts.nodes_.size();
    node.label = label;
    node.name = std::string(trim(cols[2]));
    node.depth = depth;
    if (cols.size() == 4) {
      for (std::string_view ex : split(cols[3], ','))
        if (!trim(ex).empty()) node.examples.emplace_back(trim(ex));
    }

    path.resize(static_cast<std::size_t>(depth - 1));
    if (path.empty()) {
      node.convention = label;
      ts.roots_.push_back(node.id);
    } else {
      TagNode& parent = ts.nodes_[path.back()];
      node.parent = parent.id;
      node.convention = parent.convention + std::string(kConventionSeparator) + label;
      parent.children.push_back(node.id);
    }
    path.push_back(node.id);

    ts.by_label_.emplace(label, node.id);
    ts.by_convention_.emplace(node.convention, node.id);
    ts.nodes_.push_back(std::move(node));
  }

  if (ts.nodes_.empty()) throw EmptyTagset();
  return ts;
}

Tagset Tagset::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open tagset file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), path.stem().string());
}

const Tagset& Tagset::magahi() {
  static const Tagset instance = load(magahi_definition());
  return instance;
}

std::vector<const TagNode*> Tagset::top_level() const {
  std::vector<const TagNode*> out;
  out.reserve(roots_.size());
  for (std::size_t id : roots_) out.push_back(&nodes_[id]);
  return out;
}

std::vector<const TagNode*> Tagset::list_children(const TagNode& node) const {
  std::vector<const TagNode*> out;
  out.reserve(node.children.size());
  for (std::size_t id : node.children) out.push_back(&nodes_[id]);
  return out;
}

const TagNode* Tagset::parent(const TagNode& node) const {
  return node.parent ? &nodes_[*node.parent] : nullptr;
}

const TagNode& Tagset::top_ancestor(const TagNode& node) const {
  const TagNode* cur = &node;
  while (cur->parent) cur = &nodes_[*cur->parent];
  return *cur;
}

std::vector<const TagNode*> Tagset::leaves() const {
  std::vector<const TagNode*> out;
  for (const auto& n : nodes_)
    if (n.children.empty()) out.push_back(&n);
  return out;
}

const TagNode* Tagset::find_label(std::string_view label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? nullptr : &nodes_[it->second];
}

const TagNode* Tagset::find_convention(std::string_view convention) const {
  auto it = by_convention_.find(convention);
  return it == by_convention_.end() ? nullptr : &nodes_[it->second];
}

const TagNode& Tagset::parse_tag(std::string_view convention) const {
  const TagNode* node = find_convention(convention);
  if (!node) throw UnknownTag(std::string(convention));
  return *node;
}

std::string Tagset::derive_full_tag(std::string_view label) const {
  const TagNode* node = find_label(label);
  if (!node) throw UnknownLabel(std::string(label));
  std::vector<std::string_view> labels;
  for (const TagNode* cur = node; cur; cur = parent(*cur)) labels.push_back(cur->label);
  std::string out;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    if (!out.empty()) out += kConventionSeparator;
    out += *it;
  }
  return out;
}

TagAssignment Tagset::assign(std::string_view convention, Provenance provenance) const {
  const TagNode& node = parse_tag(convention);
  return {node.convention, node.label, provenance, is_leaf(node)};
}

TagAssignment Tagset::assign_label(std::string_view label, Provenance provenance) const {
  return assign(derive_full_tag(label), provenance);
}

ValidationReport validate_assignment(const TagAssignment& assignment, const Tagset& tagset,
                                     bool strict) {
  ValidationReport report;
  const TagNode* node = tagset.find_convention(assignment.convention);
  if (!node) {
    report.add(Severity::kError, "UnknownTag", assignment.convention,
               "convention does not name a node of tagset '" + tagset.version() + "'");
    return report;
  }
  if (!assignment.leaf_label.empty() && assignment.leaf_label != node->label)
    report.add(Severity::kError, "LabelMismatch", assignment.convention,
               "leaf label '" + assignment.leaf_label + "' disagrees with convention");
  if (strict && !tagset.is_leaf(*node))
    report.add(Severity::kWarning, "NonLeafTag", assignment.convention,
               "tag names a category that has subtypes");
  return report;
}

}  // namespace ann
