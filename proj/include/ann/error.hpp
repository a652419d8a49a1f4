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

#ifndef ANN_ERROR_HPP_
#define ANN_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ann {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable name ("UnknownLabel", "DuplicateDocument", ...) that
/// the service puts into error bodies and the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// -- tagset ---------------------------------------------------------------

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("DuplicateLabel", "duplicate tag label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class DepthExceeded : public Error {
 public:
  DepthExceeded(std::size_t line, int depth)
      : Error("DepthExceeded", "line " + std::to_string(line) + ": depth " +
                                   std::to_string(depth) + " exceeds the maximum of 3") {}
};

class EmptyTagset : public Error {
 public:
  EmptyTagset() : Error("EmptyTagset", "tagset definition contains no categories") {}
};

class MalformedDefinition : public Error {
 public:
  MalformedDefinition(std::size_t line, const std::string& reason)
      : Error("MalformedDefinition", "line " + std::to_string(line) + ": " + reason) {}
};

class UnknownTag : public Error {
 public:
  explicit UnknownTag(const std::string& convention)
      : Error("UnknownTag", "unknown tag '" + convention + "'"), convention_(convention) {}
  /// Raised by readers; `line` is 1-based.
  UnknownTag(const std::string& convention, std::size_t line)
      : Error("UnknownTag", "line " + std::to_string(line) + ": unknown tag '" + convention + "'"),
        convention_(convention),
        line_(line) {}
  const std::string& convention() const noexcept { return convention_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string convention_;
  std::size_t line_ = 0;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("UnknownLabel", "unknown tag label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

// -- corpus ---------------------------------------------------------------

class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t offset)
      : Error("EncodingError", "invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class DuplicateDocument : public Error {
 public:
  explicit DuplicateDocument(const std::string& doc_id)
      : Error("DuplicateDocument", "document '" + doc_id + "' already exists") {}
};

class DuplicateSentence : public Error {
 public:
  explicit DuplicateSentence(const std::string& sid)
      : Error("DuplicateSentence", "sentence id '" + sid + "' already exists") {}
};

class UnknownDocument : public Error {
 public:
  explicit UnknownDocument(const std::string& doc_id)
      : Error("UnknownDocument", "unknown document '" + doc_id + "'") {}
};

class UnknownSentence : public Error {
 public:
  explicit UnknownSentence(const std::string& sid)
      : Error("UnknownSentence", "unknown sentence '" + sid + "'") {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("IndexOutOfRange", "token index " + std::to_string(index) +
                                     " out of range for sentence of " + std::to_string(size) +
                                     " tokens") {}
};

class InvalidValue : public Error {
 public:
  InvalidValue(const std::string& field, const std::string& reason)
      : Error("InvalidValue", field + ": " + reason), field_(field) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// -- metadata -------------------------------------------------------------

class MissingField : public Error {
 public:
  explicit MissingField(std::vector<std::string> fields)
      : Error("MissingField", "missing required field(s): " + join(fields)),
        fields_(std::move(fields)) {}
  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& f : v) {
      if (!out.empty()) out += ", ";
      out += f;
    }
    return out;
  }
  std::vector<std::string> fields_;
};

class CatalogInvalid : public Error {
 public:
  explicit CatalogInvalid(const std::string& summary)
      : Error("CatalogInvalid", "catalog does not validate: " + summary) {}
};

// -- autotag --------------------------------------------------------------

class InvalidTagInInput : public Error {
 public:
  InvalidTagInInput(const std::string& sid, std::size_t index)
      : Error("InvalidTagInInput", "sentence '" + sid + "' token " + std::to_string(index) +
                                       " carries a tag outside the tagset") {}
};

class NoSuggestion : public Error {
 public:
  NoSuggestion(const std::string& sid, std::size_t index)
      : Error("NoSuggestion", "sentence '" + sid + "' token " + std::to_string(index) +
                                  " has no pending suggestion") {}
};

// -- serialization --------------------------------------------------------

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("ParseError", "line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MisalignedTags : public Error {
 public:
  MisalignedTags(std::size_t row, std::size_t tokens, std::size_t tags)
      : Error("MisalignedTags", "row " + std::to_string(row) + ": " + std::to_string(tags) +
                                    " tags for " + std::to_string(tokens) + " tokens"),
        row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace ann

#endif  // ANN_ERROR_HPP_
