// Copyright 2026 The glossaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLOSSAUG_UNICODE_H_
#define GLOSSAUG_UNICODE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers over ICU. All strings crossing the toolkit's API are
// UTF-8; NFC is applied when text enters the toolkit.
namespace glossaug::unicode {

// Returns the byte offset of the first ill-formed sequence, or nullopt.
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

// NFC-normalizes valid UTF-8. Throws ParseError on ill-formed input.
std::string ToNfc(std::string_view text);

// Unicode White_Space predicate.
bool IsSpace(char32_t cp);

// Strips leading and trailing Unicode whitespace.
std::string_view Trim(std::string_view text);

// Splits on runs of Unicode whitespace. Never yields empty tokens.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Replaces every whitespace run with one U+0020 and trims the ends.
std::string CollapseWhitespace(std::string_view text);

// Extended grapheme clusters (UAX #29) of `text`.
std::vector<std::string> GraphemeClusters(std::string_view text);

// Decodes valid UTF-8 into code points.
std::vector<char32_t> CodePoints(std::string_view text);
std::string EncodeUtf8(char32_t cp);

// Code points that belong to the preceding phoneme: combining marks,
// modifier letters (length marks, superscripts, tone letters).
bool AttachesToPrevious(char32_t cp);

// Combining double inverted breve / double breve below.
bool IsTieBar(char32_t cp);

}  // namespace glossaug::unicode

#endif  // GLOSSAUG_UNICODE_H_
