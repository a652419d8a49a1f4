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

#ifndef ANN_REPORT_HPP_
#define ANN_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace ann {

enum class Severity { kWarning, kError };

inline const char* to_string(Severity s) { return s == Severity::kError ? "error" : "warning"; }

/// One problem found by a validator. `code` is a stable identifier such as
/// "NonLeafTag" or "DanglingSentenceRef"; `subject` names the offending
/// object (a tag, a document id, a record id).
struct Finding {
  Severity severity = Severity::kError;
  std::string code;
  std::string subject;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool empty() const { return findings.empty(); }
  bool has_errors() const {
    return std::any_of(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::kError; });
  }
  std::size_t count(const std::string& code) const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(), [&](const Finding& f) { return f.code == code; }));
  }
  void add(Severity s, std::string code, std::string subject, std::string message) {
    findings.push_back({s, std::move(code), std::move(subject), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
  std::string summary() const {
    std::string out;
    for (const auto& f : findings) {
      if (!out.empty()) out += "; ";
      out += f.code + "(" + f.subject + ")";
    }
    return out;
  }
};

}  // namespace ann

#endif  // ANN_REPORT_HPP_
