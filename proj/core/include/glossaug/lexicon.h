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

#ifndef GLOSSAUG_LEXICON_H_
#define GLOSSAUG_LEXICON_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "glossaug/corpus.h"

namespace glossaug {

// Gloss token marking a word whose gloss is unknown. Such positions never
// enter a lexicon and are left untouched by gloss replacement.
inline constexpr std::string_view kMissingGloss = "_";

// Distinct strings in first-occurrence order.
class OrderedWordSet {
 public:
  OrderedWordSet() = default;
  explicit OrderedWordSet(std::span<const std::string> words);

  // Returns true if `word` was new.
  bool Insert(const std::string& word);
  bool Contains(std::string_view word) const;

  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::vector<std::string> words_;
  std::unordered_set<std::string> index_;
};

// Maps each gloss of a training split to every distinct word carrying it.
class GlossLexicon {
 public:
  struct Entry {
    std::string gloss;
    std::vector<std::string> words;
  };

  GlossLexicon() = default;
  // Throws LexiconError on an empty word list, repeated words in an entry, or
  // a repeated gloss.
  GlossLexicon(std::vector<Entry> entries, std::string source_split_id);

  // Candidate words for `gloss`, or nullptr.
  const std::vector<std::string>* Find(std::string_view gloss) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& source_split_id() const { return source_split_id_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string source_split_id_;
};

// Every (gloss, word) association of `train`, in first-occurrence order of
// glosses and of words within a gloss. Throws LexiconError if no utterance
// carries glosses.
GlossLexicon BuildLexicon(const Corpus& train);

// Distinct words of the corpus's primary token stream.
OrderedWordSet Vocabulary(const Corpus& corpus);

// Percentage of gloss types with at least two distinct words. Throws
// LexiconError on an empty lexicon.
double AlternativeRate(const GlossLexicon& lexicon);

enum class OovCounting { kTokens, kTypes };

// Percentage of generated tokens (or distinct generated types) absent from
// `vocab`. Throws LexiconError on an empty token list.
double OovRate(std::span<const std::string> generated_tokens,
               const OrderedWordSet& vocab,
               OovCounting counting = OovCounting::kTokens);

// One row of the corpus summary table.
struct CorpusStats {
  double minutes = 0.0;
  std::size_t speakers = 0;
  std::size_t total_words = 0;
  std::size_t total_unique = 0;
  std::size_t train_words = 0;
  std::size_t train_unique = 0;
  std::size_t gloss_count = 0;
  double pct_alt = 0.0;
  std::optional<double> pct_out;

  bool operator==(const CorpusStats&) const = default;
};

// `train` must be a subset of `full` by utterance id (ConfigError otherwise).
// A train split without glosses reports gloss_count 0 and pct_alt 0.
CorpusStats ComputeCorpusStats(
    const Corpus& full, const Corpus& train,
    std::optional<std::span<const std::string>> llm_tokens = std::nullopt,
    OovCounting counting = OovCounting::kTokens);

nlohmann::ordered_json ToJson(const CorpusStats& stats);
nlohmann::ordered_json ToJson(const GlossLexicon& lexicon);
GlossLexicon LexiconFromJson(const nlohmann::json& json);

// Aligned text table, columns in the order of the published summary table.
std::string FormatStatsTable(const CorpusStats& stats, std::string_view label);

}  // namespace glossaug

#endif  // GLOSSAUG_LEXICON_H_
