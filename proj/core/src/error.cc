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

#include "glossaug/error.h"

#include <string>
#include <utility>

namespace glossaug {

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                     : message),
      line_(line) {}

AlignmentError::AlignmentError(std::string utterance_id, std::string stream,
                               std::size_t text_count,
                               std::size_t other_count)
    : Error("utterance '" + utterance_id + "': " +
            std::to_string(text_count) + " text tokens vs " +
            std::to_string(other_count) + " " + stream + " tokens"),
      utterance_id_(std::move(utterance_id)),
      text_count_(text_count),
      other_count_(other_count) {}

DuplicateIdError::DuplicateIdError(const std::string& id)
    : Error("duplicate utterance id '" + id + "'") {}

MissingGlossError::MissingGlossError(const std::string& gloss,
                                     const std::string& utterance_id)
    : LexiconError((utterance_id.empty() ? "" : "utterance '" + utterance_id + "': ") +
                   "gloss '" + gloss + "' not present in lexicon"),
      gloss_(gloss) {}

SegmentationError::SegmentationError(const std::string& text,
                                     std::size_t position)
    : MetricError("no inventory phoneme matches '" + text +
                  "' at character " + std::to_string(position)),
      position_(position) {}

EndpointError::EndpointError(const std::string& endpoint,
                             const std::string& message)
    : Error("endpoint " + endpoint + ": " + message) {}

}  // namespace glossaug
