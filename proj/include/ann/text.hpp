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

// String and UTF-8 helpers shared by the readers and the tokenizer.

#ifndef ANN_TEXT_HPP_
#define ANN_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ann {

inline constexpr char32_t kDanda = U'।';
inline constexpr char32_t kDoubleDanda = U'॥';

/// Splits on '\n'. A trailing newline does not produce an empty last line.
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);
/// Trims ASCII whitespace.
std::string_view trim(std::string_view s);

/// Throws EncodingError with the byte offset of the first invalid sequence.
void validate_utf8(std::string_view bytes);

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 0;  // bytes consumed
};

/// Decodes the code point starting at `pos`. Input must be valid UTF-8.
CodePoint decode_at(std::string_view s, std::size_t pos);

/// Unicode White_Space property.
bool is_space(char32_t cp);
/// General category P*, which includes the danda and double danda.
bool is_punct(char32_t cp);
/// True for a non-empty string made up only of punctuation characters.
bool is_punct_only(std::string_view s);
/// True if `s` contains any Unicode whitespace.
bool contains_space(std::string_view s);
/// Trims Unicode whitespace from both ends.
std::string_view trim_unicode(std::string_view s);

}  // namespace ann

#endif  // ANN_TEXT_HPP_
