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

#include "glossaug/metrics.h"

#include <algorithm>
#include <cstdint>

#include "glossaug/error.h"
#include "glossaug/unicode.h"

namespace glossaug {
namespace {

std::vector<std::string> SegmentWithInventory(std::string_view text,
                                              const PhonemeInventory& inventory) {
  const std::vector<char32_t> cps = unicode::CodePoints(text);
  std::vector<std::string> phonemes;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (unicode::IsSpace(cps[i])) {
      ++i;
      continue;
    }
    // Longest candidate first; a candidate never spans whitespace.
    std::size_t limit = 0;
    while (limit < inventory.max_length() && i + limit < cps.size() &&
           !unicode::IsSpace(cps[i + limit])) {
      ++limit;
    }
    bool matched = false;
    for (std::size_t len = limit; len > 0; --len) {
      std::string candidate;
      for (std::size_t k = i; k < i + len; ++k) {
        candidate += unicode::EncodeUtf8(cps[k]);
      }
      if (inventory.Contains(candidate)) {
        phonemes.push_back(std::move(candidate));
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) throw SegmentationError(std::string(text), i);
  }
  return phonemes;
}

std::vector<std::string> SegmentByAttachment(std::string_view text) {
  std::vector<std::string> phonemes;
  for (const std::string& word : unicode::SplitWhitespace(text)) {
    const std::size_t word_start = phonemes.size();
    bool joined_by_tie = false;
    for (std::string& cluster : unicode::GraphemeClusters(word)) {
      const std::vector<char32_t> cps = unicode::CodePoints(cluster);
      const bool attach = phonemes.size() > word_start &&
                          (joined_by_tie || unicode::AttachesToPrevious(cps.front()));
      joined_by_tie = unicode::IsTieBar(cps.back());
      if (attach) {
        phonemes.back() += cluster;
      } else {
        phonemes.push_back(std::move(cluster));
      }
    }
  }
  return phonemes;
}

}  // namespace

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kWer:
      return "wer";
    case Metric::kCer:
      return "cer";
    case Metric::kPer:
      return "per";
  }
  return "wer";
}

Metric ParseMetric(std::string_view name) {
  if (name == "wer") return Metric::kWer;
  if (name == "cer") return Metric::kCer;
  if (name == "per") return Metric::kPer;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

TokenMode TokenModeFor(Metric metric) {
  switch (metric) {
    case Metric::kCer:
      return TokenMode::kCharacter;
    case Metric::kPer:
      return TokenMode::kPhoneme;
    case Metric::kWer:
      break;
  }
  return TokenMode::kWord;
}

PhonemeInventory::PhonemeInventory(std::span<const std::string> phonemes) {
  for (const std::string& raw : phonemes) {
    std::string phoneme(unicode::Trim(unicode::ToNfc(raw)));
    if (phoneme.empty()) continue;
    max_length_ = std::max(max_length_, unicode::CodePoints(phoneme).size());
    phonemes_.insert(std::move(phoneme));
  }
  if (phonemes_.empty()) throw ConfigError("empty phoneme inventory");
}

PhonemeInventory PhonemeInventory::FromText(std::string_view text) {
  std::vector<std::string> phonemes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = unicode::Trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') phonemes.emplace_back(line);
    pos = end + 1;
  }
  return PhonemeInventory(phonemes);
}

bool PhonemeInventory::Contains(std::string_view phoneme) const {
  return phonemes_.contains(std::string(phoneme));
}

std::vector<std::string> Tokenize(std::string_view text, TokenMode mode,
                                  const PhonemeInventory* inventory) {
  const std::string nfc = unicode::ToNfc(text);
  switch (mode) {
    case TokenMode::kWord:
      return unicode::SplitWhitespace(nfc);
    case TokenMode::kCharacter:
      return unicode::GraphemeClusters(unicode::CollapseWhitespace(nfc));
    case TokenMode::kPhoneme:
      return inventory != nullptr ? SegmentWithInventory(nfc, *inventory)
                                  : SegmentByAttachment(nfc);
  }
  return {};
}

AlignmentCounts& AlignmentCounts::operator+=(const AlignmentCounts& other) {
  substitutions += other.substitutions;
  deletions += other.deletions;
  insertions += other.insertions;
  hits += other.hits;
  ref_len += other.ref_len;
  return *this;
}

AlignmentCounts EditDistance(std::span<const std::string> ref,
                             std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::uint32_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return cost[i * width + j];
  };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diagonal = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diagonal, at(i, j - 1) + 1, at(i - 1, j) + 1});
    }
  }

  AlignmentCounts counts;
  counts.ref_len = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        ++(same ? counts.hits : counts.substitutions);
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      ++counts.insertions;
      --j;
    } else {
      ++counts.deletions;
      --i;
    }
  }
  return counts;
}

AlignmentCounts EvalReport::Totals() const {
  AlignmentCounts total;
  for (const UtteranceCounts& u : per_utterance) total += u.counts;
  return total;
}

std::vector<AlignmentCounts> UtteranceCountsFor(std::span<const std::string> refs,
                                                std::span<const std::string> hyps,
                                                Metric metric,
                                                const PhonemeInventory* inventory) {
  if (refs.size() != hyps.size()) {
    throw MetricError("cannot pair " + std::to_string(refs.size()) +
                      " references with " + std::to_string(hyps.size()) +
                      " hypotheses");
  }
  const TokenMode mode = TokenModeFor(metric);
  std::vector<AlignmentCounts> counts;
  counts.reserve(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    counts.push_back(EditDistance(Tokenize(refs[i], mode, inventory),
                                  Tokenize(hyps[i], mode, inventory)));
  }
  return counts;
}

EvalReport ErrorRate(std::span<const std::string> refs,
                     std::span<const std::string> hyps, Metric metric,
                     const PhonemeInventory* inventory,
                     std::span<const std::string> ids) {
  if (refs.empty()) throw MetricError("no references to score");
  if (!ids.empty() && ids.size() != refs.size()) {
    throw MetricError("id list does not match the references");
  }
  const std::vector<AlignmentCounts> counts =
      UtteranceCountsFor(refs, hyps, metric, inventory);

  EvalReport report;
  report.metric = metric;
  report.per_utterance.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    report.per_utterance.push_back(
        {ids.empty() ? std::to_string(i + 1) : ids[i], counts[i]});
  }
  const AlignmentCounts total = report.Totals();
  if (total.ref_len == 0) {
    throw MetricError("every reference is empty; the error rate is undefined");
  }
  report.corpus_rate = 100.0 * static_cast<double>(total.errors()) /
                       static_cast<double>(total.ref_len);
  return report;
}

nlohmann::ordered_json ToJson(const AlignmentCounts& counts) {
  return {{"substitutions", counts.substitutions},
          {"deletions", counts.deletions},
          {"insertions", counts.insertions},
          {"hits", counts.hits},
          {"ref_len", counts.ref_len}};
}

nlohmann::ordered_json ToJson(const EvalReport& report) {
  nlohmann::ordered_json json;
  json["metric"] = std::string(ToString(report.metric));
  json["corpus_rate"] = report.corpus_rate;
  json["totals"] = ToJson(report.Totals());
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const UtteranceCounts& u : report.per_utterance) {
    nlohmann::ordered_json row;
    row["id"] = u.id;
    row.update(ToJson(u.counts));
    rows.push_back(std::move(row));
  }
  json["per_utterance"] = std::move(rows);
  return json;
}

}  // namespace glossaug
