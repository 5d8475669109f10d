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

#ifndef GLOSSAUG_DELIMITED_H_
#define GLOSSAUG_DELIMITED_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace glossaug {

// One logical row of a delimited file. `line` is the 1-based physical line on
// which the row starts (quoted fields may span lines).
struct DelimitedRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

struct DelimitedTable {
  std::vector<std::string> header;
  std::vector<DelimitedRecord> rows;

  // Index of `column` in the header, or npos.
  std::size_t Column(std::string_view column) const;
};

// Tab if the first line contains a tab, otherwise comma.
char SniffDelimiter(std::string_view data);

// Reads RFC 4180-style quoted fields with an arbitrary delimiter. Lines
// beginning with '#' before the header are skipped and returned through
// `comments` when non-null. Blank lines are skipped. Throws ParseError on
// ill-formed UTF-8, unterminated quotes, or (when `strict_width`) rows whose
// width differs from the header.
DelimitedTable ReadDelimited(std::string_view data, char delimiter,
                             std::vector<std::string>* comments = nullptr,
                             bool strict_width = true);

// Appends one row terminated by '\n'. Fields containing the delimiter, a
// quote, CR or LF are quoted with embedded quotes doubled.
void AppendDelimitedRow(std::string& out, const std::vector<std::string>& fields,
                        char delimiter);

}  // namespace glossaug

#endif  // GLOSSAUG_DELIMITED_H_
