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

#include "glossaug/lexicon.h"

#include <algorithm>
#include <cstdio>
#include <unordered_set>
#include <utility>

#include "glossaug/error.h"

namespace glossaug {

OrderedWordSet::OrderedWordSet(std::span<const std::string> words) {
  for (const std::string& word : words) Insert(word);
}

bool OrderedWordSet::Insert(const std::string& word) {
  if (!index_.insert(word).second) return false;
  words_.push_back(word);
  return true;
}

bool OrderedWordSet::Contains(std::string_view word) const {
  return index_.contains(std::string(word));
}

GlossLexicon::GlossLexicon(std::vector<Entry> entries,
                           std::string source_split_id)
    : entries_(std::move(entries)),
      source_split_id_(std::move(source_split_id)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& entry = entries_[i];
    if (entry.words.empty()) {
      throw LexiconError("gloss '" + entry.gloss + "' has no words");
    }
    std::unordered_set<std::string_view> words;
    for (const std::string& word : entry.words) {
      if (!words.insert(word).second) {
        throw LexiconError("gloss '" + entry.gloss + "' lists '" + word +
                           "' twice");
      }
    }
    if (!index_.emplace(entry.gloss, i).second) {
      throw LexiconError("gloss '" + entry.gloss + "' appears twice");
    }
  }
}

const std::vector<std::string>* GlossLexicon::Find(std::string_view gloss) const {
  auto it = index_.find(std::string(gloss));
  return it == index_.end() ? nullptr : &entries_[it->second].words;
}

GlossLexicon BuildLexicon(const Corpus& train) {
  std::vector<GlossLexicon::Entry> entries;
  std::unordered_map<std::string, std::size_t> slot;
  std::vector<OrderedWordSet> seen;
  for (const Utterance& u : train.utterances()) {
    if (!u.gloss_tokens) continue;
    const std::vector<std::string>& words = train.Tokens(u);
    const std::vector<std::string>& glosses = *u.gloss_tokens;
    for (std::size_t i = 0; i < glosses.size(); ++i) {
      if (glosses[i] == kMissingGloss) continue;
      auto [it, inserted] = slot.emplace(glosses[i], entries.size());
      if (inserted) {
        entries.push_back({glosses[i], {}});
        seen.emplace_back();
      }
      if (seen[it->second].Insert(words[i])) {
        entries[it->second].words.push_back(words[i]);
      }
    }
  }
  if (entries.empty()) {
    throw LexiconError("training split '" + train.name() +
                       "' carries no glosses; cannot build a lexicon");
  }
  return GlossLexicon(std::move(entries), train.name());
}

OrderedWordSet Vocabulary(const Corpus& corpus) {
  OrderedWordSet vocab;
  for (const Utterance& u : corpus.utterances()) {
    for (const std::string& word : corpus.Tokens(u)) vocab.Insert(word);
  }
  return vocab;
}

double AlternativeRate(const GlossLexicon& lexicon) {
  if (lexicon.empty()) throw LexiconError("alternative rate of an empty lexicon");
  const auto with_alternatives = std::count_if(
      lexicon.entries().begin(), lexicon.entries().end(),
      [](const GlossLexicon::Entry& e) { return e.words.size() >= 2; });
  return 100.0 * static_cast<double>(with_alternatives) /
         static_cast<double>(lexicon.size());
}

double OovRate(std::span<const std::string> generated_tokens,
               const OrderedWordSet& vocab, OovCounting counting) {
  if (generated_tokens.empty()) {
    throw LexiconError("OOV rate of an empty token list");
  }
  if (counting == OovCounting::kTypes) {
    const OrderedWordSet types(generated_tokens);
    const auto oov = std::count_if(
        types.words().begin(), types.words().end(),
        [&](const std::string& w) { return !vocab.Contains(w); });
    return 100.0 * static_cast<double>(oov) / static_cast<double>(types.size());
  }
  const auto oov = std::count_if(
      generated_tokens.begin(), generated_tokens.end(),
      [&](const std::string& w) { return !vocab.Contains(w); });
  return 100.0 * static_cast<double>(oov) /
         static_cast<double>(generated_tokens.size());
}

CorpusStats ComputeCorpusStats(const Corpus& full, const Corpus& train,
                               std::optional<std::span<const std::string>> llm_tokens,
                               OovCounting counting) {
  std::unordered_set<std::string_view> full_ids;
  for (const Utterance& u : full.utterances()) full_ids.insert(u.id);
  for (const Utterance& u : train.utterances()) {
    if (!full_ids.contains(u.id)) {
      throw ConfigError("training utterance '" + u.id +
                        "' is not part of the full corpus");
    }
  }

  CorpusStats stats;
  double seconds = 0.0;
  std::unordered_set<std::string_view> speakers;
  for (const Utterance& u : full.utterances()) {
    seconds += u.duration_s;
    speakers.insert(u.speaker);
    stats.total_words += full.Tokens(u).size();
  }
  stats.minutes = seconds / 60.0;
  stats.speakers = speakers.size();
  stats.total_unique = Vocabulary(full).size();
  for (const Utterance& u : train.utterances()) {
    stats.train_words += train.Tokens(u).size();
  }
  const OrderedWordSet train_vocab = Vocabulary(train);
  stats.train_unique = train_vocab.size();

  const bool has_glosses =
      std::any_of(train.utterances().begin(), train.utterances().end(),
                  [](const Utterance& u) { return u.gloss_tokens.has_value(); });
  if (has_glosses) {
    try {
      const GlossLexicon lexicon = BuildLexicon(train);
      stats.gloss_count = lexicon.size();
      stats.pct_alt = AlternativeRate(lexicon);
    } catch (const LexiconError&) {
      // Every gloss is the missing-gloss placeholder.
    }
  }
  if (llm_tokens) stats.pct_out = OovRate(*llm_tokens, train_vocab, counting);
  return stats;
}

nlohmann::ordered_json ToJson(const CorpusStats& stats) {
  nlohmann::ordered_json json;
  json["minutes"] = stats.minutes;
  json["speakers"] = stats.speakers;
  json["total_words"] = stats.total_words;
  json["total_unique"] = stats.total_unique;
  json["train_words"] = stats.train_words;
  json["train_unique"] = stats.train_unique;
  json["gloss_count"] = stats.gloss_count;
  json["pct_alt"] = stats.pct_alt;
  json["pct_out"] = stats.pct_out ? nlohmann::ordered_json(*stats.pct_out)
                                  : nlohmann::ordered_json(nullptr);
  return json;
}

nlohmann::ordered_json ToJson(const GlossLexicon& lexicon) {
  nlohmann::ordered_json json;
  json["source_split_id"] = lexicon.source_split_id();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const GlossLexicon::Entry& entry : lexicon.entries()) {
    entries.push_back({{"gloss", entry.gloss}, {"words", entry.words}});
  }
  json["entries"] = std::move(entries);
  return json;
}

GlossLexicon LexiconFromJson(const nlohmann::json& json) {
  try {
    std::vector<GlossLexicon::Entry> entries;
    for (const auto& item : json.at("entries")) {
      entries.push_back({item.at("gloss").get<std::string>(),
                         item.at("words").get<std::vector<std::string>>()});
    }
    return GlossLexicon(std::move(entries),
                        json.value("source_split_id", std::string()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad lexicon JSON: ") + e.what(), 0);
  }
}

std::string FormatStatsTable(const CorpusStats& stats, std::string_view label) {
  const std::vector<std::string> header = {
      "",      "Minutes",     "Speakers",     "Total Words", "Total Unique",
      "Train Words", "Train Unique", "Gloss", "% Alt.", "% Out"};
  auto fixed = [](double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
    return std::string(buffer);
  };
  const std::vector<std::string> row = {
      std::string(label),
      fixed(stats.minutes, 1),
      std::to_string(stats.speakers),
      std::to_string(stats.total_words),
      std::to_string(stats.total_unique),
      std::to_string(stats.train_words),
      std::to_string(stats.train_unique),
      std::to_string(stats.gloss_count),
      fixed(stats.pct_alt, 1),
      stats.pct_out ? fixed(*stats.pct_out, 1) : std::string("-")};

  std::string out;
  for (const auto* line : {&header, &row}) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::size_t width = std::max(header[c].size(), row[c].size());
      const std::string& cell = (*line)[c];
      if (c == 0) {
        out += cell + std::string(width - cell.size(), ' ');
      } else {
        out += "  " + std::string(width - cell.size(), ' ') + cell;
      }
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace glossaug
