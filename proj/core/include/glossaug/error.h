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

#ifndef GLOSSAUG_ERROR_H_
#define GLOSSAUG_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace glossaug {

// Base class for every data-level failure raised by the toolkit. The CLI maps
// these to exit code 2; anything else escaping a subcommand is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad UTF-8, bad quoting, missing required columns, bad JSON.
// `line` is 1-based; 0 when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parallel token streams of an utterance disagree in length.
class AlignmentError : public Error {
 public:
  AlignmentError(std::string utterance_id, std::string stream,
                 std::size_t text_count, std::size_t other_count);
  const std::string& utterance_id() const { return utterance_id_; }
  std::size_t text_count() const { return text_count_; }
  std::size_t other_count() const { return other_count_; }

 private:
  std::string utterance_id_;
  std::size_t text_count_;
  std::size_t other_count_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(const std::string& id);
};

// Invalid configuration: split fractions, voice lists, endpoint settings.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Empty lexicon, gloss absent from a lexicon, empty vocabulary.
class LexiconError : public Error {
 public:
  using Error::Error;
};

class MissingGlossError : public LexiconError {
 public:
  explicit MissingGlossError(const std::string& gloss,
                             const std::string& utterance_id = {});
  const std::string& gloss() const { return gloss_; }

 private:
  std::string gloss_;
};

// Reference/hypothesis lists that cannot be paired, or rates that are
// undefined (no reference tokens at all).
class MetricError : public Error {
 public:
  using Error::Error;
};

// Phoneme segmentation against an inventory left an unmatched residue.
// `position` counts code points from the start of the input text.
class SegmentationError : public MetricError {
 public:
  SegmentationError(const std::string& text, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Network, auth or timeout failure talking to an LLM endpoint.
class EndpointError : public Error {
 public:
  EndpointError(const std::string& endpoint, const std::string& message);
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace glossaug

#endif  // GLOSSAUG_ERROR_H_
