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

#include "glossaug/unicode.h"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <memory>

#include "glossaug/error.h"

namespace glossaug::unicode {
namespace {

icu::UnicodeString FromUtf8(std::string_view text) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
}

std::string ToUtf8(const icu::UnicodeString& text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

// Character break iterators are costly to create; keep one per thread.
icu::BreakIterator& CharacterBreaker() {
  thread_local std::unique_ptr<icu::BreakIterator> breaker = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                    status));
    if (U_FAILURE(status)) {
      throw Error(std::string("ICU break iterator: ") + u_errorName(status));
    }
    return it;
  }();
  return *breaker;
}

template <typename Fn>
void ForEachCodePoint(std::string_view text, Fn&& fn) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    fn(static_cast<char32_t>(c < 0 ? 0xFFFD : c), start, i);
  }
}

}  // namespace

std::optional<std::size_t> FindInvalidUtf8(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return static_cast<std::size_t>(start);
  }
  return std::nullopt;
}

std::string ToNfc(std::string_view text) {
  if (auto bad = FindInvalidUtf8(text)) {
    throw ParseError("invalid UTF-8 at byte " + std::to_string(*bad), 0);
  }
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(std::string("ICU NFC: ") + u_errorName(status));
  }
  const icu::UnicodeString source = FromUtf8(text);
  if (nfc->isNormalized(source, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("ICU NFC: ") + u_errorName(status));
  }
  return ToUtf8(normalized);
}

bool IsSpace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

std::string_view Trim(std::string_view text) {
  std::size_t begin = text.size();
  std::size_t end = 0;
  ForEachCodePoint(text, [&](char32_t cp, int32_t from, int32_t to) {
    if (IsSpace(cp)) return;
    if (begin == text.size()) begin = static_cast<std::size_t>(from);
    end = static_cast<std::size_t>(to);
  });
  if (begin >= end) return {};
  return text.substr(begin, end - begin);
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  bool in_token = false;
  ForEachCodePoint(text, [&](char32_t cp, int32_t from, int32_t) {
    const bool space = IsSpace(cp);
    if (space && in_token) {
      tokens.emplace_back(text.substr(start, from - start));
      in_token = false;
    } else if (!space && !in_token) {
      start = static_cast<std::size_t>(from);
      in_token = true;
    }
  });
  if (in_token) tokens.emplace_back(text.substr(start));
  return tokens;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  for (const std::string& token : SplitWhitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::vector<std::string> GraphemeClusters(std::string_view text) {
  std::vector<std::string> clusters;
  if (text.empty()) return clusters;
  const icu::UnicodeString source = FromUtf8(text);
  icu::BreakIterator& breaker = CharacterBreaker();
  breaker.setText(source);
  int32_t start = breaker.first();
  for (int32_t end = breaker.next(); end != icu::BreakIterator::DONE;
       start = end, end = breaker.next()) {
    clusters.push_back(ToUtf8(source.tempSubStringBetween(start, end)));
  }
  return clusters;
}

std::vector<char32_t> CodePoints(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  ForEachCodePoint(text, [&](char32_t cp, int32_t, int32_t) {
    out.push_back(cp);
  });
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  uint8_t buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(buffer, length, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) return "\xEF\xBF\xBD";
  return std::string(reinterpret_cast<const char*>(buffer),
                     static_cast<std::size_t>(length));
}

bool AttachesToPrevious(char32_t cp) {
  switch (u_charType(static_cast<UChar32>(cp))) {
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
    case U_MODIFIER_LETTER:
      return true;
    default:
      break;
  }
  // Spacing Modifier Letters (tone letters, rhoticity hook) and the
  // superscripts/subscripts block.
  return (cp >= 0x02B0 && cp <= 0x02FF) || (cp >= 0x2070 && cp <= 0x209F);
}

bool IsTieBar(char32_t cp) { return cp == 0x0361 || cp == 0x035C; }

}  // namespace glossaug::unicode
