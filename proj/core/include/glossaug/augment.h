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

#ifndef GLOSSAUG_AUGMENT_H_
#define GLOSSAUG_AUGMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glossaug/corpus.h"
#include "glossaug/lexicon.h"
#include "glossaug/rng.h"

namespace glossaug {

enum class AugmentMethod { kGloss, kRandom, kLlm };

std::string_view ToString(AugmentMethod method);
AugmentMethod ParseAugmentMethod(std::string_view name);

// A synthetic sentence and how it was made. `seed_trace` lists, per drawn
// position, the index chosen within that position's candidate list.
struct AugmentedSentence {
  std::string origin_id;
  AugmentMethod method = AugmentMethod::kGloss;
  std::vector<std::string> tokens;
  std::optional<std::vector<std::string>> gloss_tokens;
  std::vector<std::uint64_t> seed_trace;

  bool operator==(const AugmentedSentence&) const = default;
};

// Replaces every word with a uniform draw from the words sharing its gloss
// (the original word included). Positions glossed with kMissingGloss keep
// their word. Throws LexiconError if `u` has no glosses and MissingGlossError
// if a gloss is absent from `lexicon`.
AugmentedSentence GlossReplace(
    const Utterance& u, const GlossLexicon& lexicon, Rng& rng,
    TranscriptionMode mode = TranscriptionMode::kOrthographic);

// Replaces every word with an independent uniform draw from `candidates`
// (vocabulary types, or every training token for frequency weighting).
// Only the length of `u` is used. Throws LexiconError on empty candidates.
AugmentedSentence RandomReplace(
    const Utterance& u, std::span<const std::string> candidates, Rng& rng,
    TranscriptionMode mode = TranscriptionMode::kOrthographic);

struct AugmentOptions {
  AugmentMethod method = AugmentMethod::kGloss;
  std::uint64_t seed = 0;
  // Random method only: sample proportionally to training token frequency.
  bool frequency_weighted = false;
  unsigned threads = 1;
};

// One synthetic sentence per training utterance, element i derived from
// utterance i with its own RNG substream. Output is identical for any thread
// count. Errors are rethrown with the utterance id prefixed.
std::vector<AugmentedSentence> AugmentCorpus(const Corpus& train,
                                             const AugmentOptions& options);

std::string AugmentedToJsonLines(std::span<const AugmentedSentence> sentences);
std::vector<AugmentedSentence> ParseAugmentedJsonLines(std::string_view text);

}  // namespace glossaug

#endif  // GLOSSAUG_AUGMENT_H_
