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

#include "glossaug/delimited.h"

#include <algorithm>

#include "glossaug/error.h"
#include "glossaug/unicode.h"

namespace glossaug {

std::size_t DelimitedTable::Column(std::string_view column) const {
  auto it = std::find(header.begin(), header.end(), column);
  return it == header.end() ? std::string_view::npos
                            : static_cast<std::size_t>(it - header.begin());
}

char SniffDelimiter(std::string_view data) {
  // Skip leading comment lines so a metadata line cannot decide the dialect.
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string_view::npos) end = data.size();
    std::string_view line = data.substr(pos, end - pos);
    if (!line.empty() && line.front() != '#') {
      return line.find('\t') != std::string_view::npos ? '\t' : ',';
    }
    pos = end + 1;
  }
  return '\t';
}

DelimitedTable ReadDelimited(std::string_view data, char delimiter,
                             std::vector<std::string>* comments,
                             bool strict_width) {
  // Validate encoding up front so the error can name a line.
  if (auto bad = unicode::FindInvalidUtf8(data)) {
    const auto line = 1 + static_cast<std::size_t>(std::count(
                              data.begin(), data.begin() + *bad, '\n'));
    throw ParseError("invalid UTF-8", line);
  }
  if (data.size() >= 3 && data.substr(0, 3) == "\xEF\xBB\xBF") {
    data.remove_prefix(3);
  }

  DelimitedTable table;
  bool have_header = false;
  std::size_t line = 1;
  std::size_t i = 0;
  const std::size_t n = data.size();

  while (i < n) {
    // Comment and blank lines only count before the header.
    if (!have_header && data[i] == '#') {
      std::size_t end = data.find('\n', i);
      if (end == std::string_view::npos) end = n;
      std::string_view text = data.substr(i, end - i);
      if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
      if (comments != nullptr) comments->emplace_back(text);
      i = end + 1;
      ++line;
      continue;
    }
    if (data[i] == '\n' || (data[i] == '\r' && i + 1 < n && data[i + 1] == '\n')) {
      i += data[i] == '\r' ? 2 : 1;
      ++line;
      continue;
    }

    DelimitedRecord record;
    record.line = line;
    std::string field;
    bool done = false;
    while (!done) {
      field.clear();
      if (i < n && data[i] == '"') {
        ++i;
        for (;;) {
          if (i >= n) throw ParseError("unterminated quoted field", record.line);
          const char c = data[i++];
          if (c == '"') {
            if (i < n && data[i] == '"') {
              field.push_back('"');
              ++i;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
          }
        }
        if (i < n && data[i] != delimiter && data[i] != '\n' && data[i] != '\r') {
          throw ParseError("unexpected character after closing quote", line);
        }
      } else {
        while (i < n && data[i] != delimiter && data[i] != '\n' &&
               !(data[i] == '\r' && (i + 1 >= n || data[i + 1] == '\n'))) {
          field.push_back(data[i++]);
        }
      }
      record.fields.push_back(field);
      if (i < n && data[i] == delimiter) {
        ++i;
      } else {
        if (i < n && data[i] == '\r') ++i;
        if (i < n && data[i] == '\n') ++i;
        ++line;
        done = true;
      }
    }

    if (!have_header) {
      table.header = std::move(record.fields);
      for (std::string& name : table.header) {
        name = std::string(unicode::Trim(name));
      }
      have_header = true;
      continue;
    }
    if (strict_width && record.fields.size() != table.header.size()) {
      throw ParseError("expected " + std::to_string(table.header.size()) +
                           " fields, found " +
                           std::to_string(record.fields.size()),
                       record.line);
    }
    table.rows.push_back(std::move(record));
  }
  return table;
}

void AppendDelimitedRow(std::string& out, const std::vector<std::string>& fields,
                        char delimiter) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(delimiter);
    const std::string& field = fields[i];
    const bool quote = field.find_first_of(std::string{delimiter, '"', '\r', '\n'}) !=
                       std::string::npos;
    if (!quote) {
      out += field;
      continue;
    }
    out.push_back('"');
    for (char c : field) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  }
  out.push_back('\n');
}

}  // namespace glossaug
