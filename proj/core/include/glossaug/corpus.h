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

#ifndef GLOSSAUG_CORPUS_H_
#define GLOSSAUG_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glossaug {

enum class TranscriptionMode { kOrthographic, kIpa };
enum class CorpusFormat { kDelimited, kJsonLines };

std::string_view ToString(TranscriptionMode mode);
TranscriptionMode ParseTranscriptionMode(std::string_view name);

// One annotated speech segment. Parallel streams (ipa, gloss, pos) hold one
// token per text token; morpheme separators stay inside a token.
struct Utterance {
  std::string id;
  std::string speaker;
  std::string audio_ref;
  double duration_s = 0.0;
  std::vector<std::string> text_tokens;
  std::optional<std::vector<std::string>> ipa_tokens;
  std::optional<std::vector<std::string>> gloss_tokens;
  std::optional<std::vector<std::string>> pos_tokens;
  // Language code -> free translation. "other" holds the second translation
  // column of the delimited schema.
  std::map<std::string, std::string> translations;

  // Throws ParseError / AlignmentError when an invariant is violated.
  void Validate() const;

  // Token stream used for words: text, or ipa when `mode` is kIpa.
  const std::vector<std::string>& Tokens(TranscriptionMode mode) const;

  bool operator==(const Utterance&) const = default;
};

// An ordered, immutable collection of utterances with unique ids.
class Corpus {
 public:
  Corpus() = default;
  // Validates every utterance and id uniqueness.
  Corpus(std::string name, TranscriptionMode mode,
         std::vector<Utterance> utterances);

  const std::string& name() const { return name_; }
  TranscriptionMode transcription_mode() const { return mode_; }
  const std::vector<Utterance>& utterances() const { return utterances_; }
  std::size_t size() const { return utterances_.size(); }
  bool empty() const { return utterances_.empty(); }
  const Utterance& operator[](std::size_t i) const { return utterances_[i]; }

  // Primary token stream of `u` under this corpus's transcription mode.
  const std::vector<std::string>& Tokens(const Utterance& u) const {
    return u.Tokens(mode_);
  }

  bool operator==(const Corpus&) const = default;

 private:
  std::string name_;
  TranscriptionMode mode_ = TranscriptionMode::kOrthographic;
  std::vector<Utterance> utterances_;
};

struct ParseOptions {
  // Used unless the source carries its own metadata line.
  std::string name;
  TranscriptionMode mode = TranscriptionMode::kOrthographic;
  // 0 sniffs tab vs comma from the header line.
  char delimiter = 0;
};

struct SerializeOptions {
  char delimiter = '\t';
  // Write the "#glossaug {...}" metadata line when name or mode differ from
  // the defaults.
  bool metadata = true;
};

// Canonical columns of the delimited schema, in file order.
const std::vector<std::string>& DelimitedColumns();

Corpus ParseCorpus(std::string_view source, CorpusFormat format,
                   const ParseOptions& options = {});
std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format,
                            const SerializeOptions& options = {});

// Format from extension: .jsonl/.json -> JSON lines, anything else delimited.
CorpusFormat FormatForPath(const std::filesystem::path& path);
Corpus ReadCorpusFile(const std::filesystem::path& path,
                      ParseOptions options = {});
void WriteCorpusFile(const Corpus& corpus, const std::filesystem::path& path);

struct SplitSpec {
  double train_fraction = 0.8;
  double val_fraction = 0.1;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;

  // Throws ConfigError unless each fraction is in [0, 1] and they sum to 1
  // within 1e-9.
  void Validate() const;
};

struct CorpusSplits {
  Corpus train;
  Corpus val;
  Corpus test;
};

// Partitions by utterance (speakers may span splits). Validation and test
// sizes are round(fraction * N); the remainder goes to train. Membership is a
// function of (seed, utterance position); each split keeps corpus order.
CorpusSplits SplitCorpus(const Corpus& corpus, const SplitSpec& spec);

// Splits raw text into NFC-normalized whitespace tokens.
std::vector<std::string> TokenizeField(std::string_view field);

// Reads a whole file; throws IoError.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace glossaug

#endif  // GLOSSAUG_CORPUS_H_
