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

#ifndef GLOSSAUG_METRICS_H_
#define GLOSSAUG_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

namespace glossaug {

enum class Metric { kWer, kCer, kPer };
enum class TokenMode { kWord, kCharacter, kPhoneme };

std::string_view ToString(Metric metric);
Metric ParseMetric(std::string_view name);
TokenMode TokenModeFor(Metric metric);

// A set of phoneme strings for greedy longest-match segmentation.
class PhonemeInventory {
 public:
  explicit PhonemeInventory(std::span<const std::string> phonemes);
  // One phoneme per line; blank lines and '#' comments ignored.
  static PhonemeInventory FromText(std::string_view text);

  bool Contains(std::string_view phoneme) const;
  // Longest phoneme length in code points.
  std::size_t max_length() const { return max_length_; }
  std::size_t size() const { return phonemes_.size(); }

 private:
  std::unordered_set<std::string> phonemes_;
  std::size_t max_length_ = 0;
};

// word: whitespace split. character: whitespace runs collapsed to one space
// (kept as a token), ends trimmed, then grapheme clusters. phoneme: with an
// inventory, greedy longest match per word; without one, grapheme clusters
// with combining marks, modifier letters and tie-barred bases joined to the
// preceding unit of the same word. Spaces never form phonemes. Input is
// NFC-normalized first. Throws SegmentationError on unmatched residue.
std::vector<std::string> Tokenize(std::string_view text, TokenMode mode,
                                  const PhonemeInventory* inventory = nullptr);

struct AlignmentCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t hits = 0;
  std::size_t ref_len = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  AlignmentCounts& operator+=(const AlignmentCounts& other);
  bool operator==(const AlignmentCounts&) const = default;
};

// Minimum unit-cost Levenshtein alignment. Among optimal alignments the
// backtrace from the end prefers a diagonal step (hit or substitution), then
// an insertion, then a deletion.
AlignmentCounts EditDistance(std::span<const std::string> ref,
                             std::span<const std::string> hyp);

struct UtteranceCounts {
  std::string id;
  AlignmentCounts counts;
};

struct EvalReport {
  Metric metric = Metric::kWer;
  // 100 * sum(S + D + I) / sum(ref_len), pooled over utterances.
  double corpus_rate = 0.0;
  std::vector<UtteranceCounts> per_utterance;

  AlignmentCounts Totals() const;
};

// Pools counts over index-paired references and hypotheses. `ids`, when
// non-empty, must match refs in length. Throws MetricError on a length
// mismatch, no references, or zero total reference tokens.
EvalReport ErrorRate(std::span<const std::string> refs,
                     std::span<const std::string> hyps, Metric metric,
                     const PhonemeInventory* inventory = nullptr,
                     std::span<const std::string> ids = {});

// Per-utterance counts only, shared with the bootstrap.
std::vector<AlignmentCounts> UtteranceCountsFor(
    std::span<const std::string> refs, std::span<const std::string> hyps,
    Metric metric, const PhonemeInventory* inventory = nullptr);

nlohmann::ordered_json ToJson(const AlignmentCounts& counts);
nlohmann::ordered_json ToJson(const EvalReport& report);

}  // namespace glossaug

#endif  // GLOSSAUG_METRICS_H_
