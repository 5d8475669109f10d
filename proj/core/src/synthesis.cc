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

#include "glossaug/synthesis.h"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "glossaug/error.h"

namespace glossaug {
namespace {

std::string Join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

// Calls fn(json, line_no) for each non-blank line; JSON errors become
// ParseError with the line number.
template <typename Fn>
void ForEachJsonLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const nlohmann::json json = nlohmann::json::parse(line, nullptr, false);
    if (json.is_discarded() || !json.is_object()) {
      throw ParseError("not a JSON object", line_no);
    }
    try {
      fn(json, line_no);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
}

}  // namespace

std::vector<SynthesisEntry> AssignVoices(std::span<const AugmentedSentence> sentences,
                                         std::span<const std::string> voices) {
  if (voices.size() != kVoiceCount) {
    throw ConfigError("expected exactly " + std::to_string(kVoiceCount) +
                      " voices, got " + std::to_string(voices.size()));
  }
  std::set<std::string_view> distinct;
  for (const std::string& voice : voices) {
    if (voice.empty()) throw ConfigError("empty voice name");
    if (!distinct.insert(voice).second) {
      throw ConfigError("voice '" + voice + "' listed twice");
    }
  }
  if (sentences.empty()) throw ConfigError("no sentences to synthesize");

  std::vector<SynthesisEntry> entries;
  entries.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const AugmentedSentence& s = sentences[i];
    if (s.tokens.empty()) {
      throw ConfigError("sentence " + std::to_string(i) + " from '" +
                        s.origin_id + "' has no tokens");
    }
    entries.push_back({s.origin_id + "-" + std::string(ToString(s.method)) + "-" +
                           std::to_string(i),
                       Join(s.tokens), voices[i % kVoiceCount], s.method,
                       kTargetSampleRate});
  }
  return entries;
}

std::string EmitManifest(std::span<const SynthesisEntry> entries) {
  std::string out;
  for (const SynthesisEntry& e : entries) {
    nlohmann::ordered_json json;
    json["id"] = e.id;
    json["text"] = e.text;
    json["voice"] = e.voice;
    json["method"] = std::string(ToString(e.method));
    json["sample_rate"] = e.sample_rate;
    out += json.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<SynthesisEntry> ParseManifest(std::string_view text) {
  std::vector<SynthesisEntry> entries;
  ForEachJsonLine(text, [&](const nlohmann::json& json, std::size_t line_no) {
    SynthesisEntry e;
    e.id = json.at("id").get<std::string>();
    e.text = json.at("text").get<std::string>();
    e.voice = json.at("voice").get<std::string>();
    try {
      e.method = ParseAugmentMethod(json.at("method").get<std::string>());
    } catch (const ConfigError& error) {
      throw ParseError(error.what(), line_no);
    }
    e.sample_rate = json.value("sample_rate", kTargetSampleRate);
    if (e.sample_rate != kTargetSampleRate) {
      throw ParseError("sample_rate must be " + std::to_string(kTargetSampleRate),
                       line_no);
    }
    if (e.id.empty() || e.text.empty()) {
      throw ParseError("manifest entry needs id and text", line_no);
    }
    entries.push_back(std::move(e));
  });
  return entries;
}

std::map<std::string, std::string> ParseAudioIndex(std::string_view text) {
  std::map<std::string, std::string> index;
  ForEachJsonLine(text, [&](const nlohmann::json& json, std::size_t line_no) {
    std::string id = json.at("id").get<std::string>();
    std::string audio = json.at("audio").get<std::string>();
    if (!index.emplace(std::move(id), std::move(audio)).second) {
      throw ParseError("duplicate id in audio index", line_no);
    }
  });
  return index;
}

std::string EmitAudioIndex(const std::map<std::string, std::string>& index) {
  std::string out;
  for (const auto& [id, audio] : index) {
    nlohmann::ordered_json json;
    json["id"] = id;
    json["audio"] = audio;
    out += json.dump();
    out.push_back('\n');
  }
  return out;
}

std::string_view ToString(Origin origin) {
  return origin == Origin::kSynthetic ? "synthetic" : "original";
}

TrainingManifest MixTrainingSet(const Corpus& original,
                                const std::map<std::string, std::string>& audio_index,
                                std::span<const SynthesisEntry> entries,
                                const MixOptions& options) {
  if (original.empty()) throw ConfigError("no original utterances to mix");
  if (entries.empty() && !options.allow_baseline) {
    throw ConfigError("no synthetic entries; pass allow_baseline for an "
                      "unaugmented manifest");
  }
  if (entries.size() > original.size() && !options.allow_above_one) {
    throw ConfigError("synthetic-to-original ratio " +
                      std::to_string(entries.size()) + ":" +
                      std::to_string(original.size()) +
                      " exceeds 1:1; pass allow_above_one to accept it");
  }
  std::vector<std::string> missing;
  for (const SynthesisEntry& e : entries) {
    if (!audio_index.contains(e.id)) missing.push_back(e.id);
  }
  if (!missing.empty()) {
    std::string list;
    for (const std::string& id : missing) list += (list.empty() ? "" : ", ") + id;
    throw Error("no synthesized audio for " + std::to_string(missing.size()) +
                " entries: " + list);
  }

  TrainingManifest manifest;
  manifest.entries.reserve(original.size() + entries.size());
  std::unordered_set<std::string> ids;
  auto add = [&](ManifestRow row) {
    if (!ids.insert(row.id).second) {
      throw ConfigError("id '" + row.id + "' appears twice in the mixed manifest");
    }
    manifest.entries.push_back(std::move(row));
  };
  const std::size_t rounds = std::max(original.size(), entries.size());
  for (std::size_t i = 0; i < rounds; ++i) {
    if (i < original.size()) {
      const Utterance& u = original[i];
      add({u.id, u.audio_ref, Join(original.Tokens(u)), Origin::kOriginal});
    }
    if (i < entries.size()) {
      const SynthesisEntry& e = entries[i];
      add({e.id, audio_index.at(e.id), e.text, Origin::kSynthetic});
    }
  }
  manifest.ratio =
      static_cast<double>(entries.size()) / static_cast<double>(original.size());
  return manifest;
}

std::string EmitTrainingManifest(const TrainingManifest& manifest) {
  std::string out;
  for (const ManifestRow& row : manifest.entries) {
    nlohmann::ordered_json json;
    json["id"] = row.id;
    json["audio"] = row.audio;
    json["transcript"] = row.transcript;
    json["origin"] = std::string(ToString(row.origin));
    out += json.dump();
    out.push_back('\n');
  }
  return out;
}

TrainingManifest ParseTrainingManifest(std::string_view text) {
  TrainingManifest manifest;
  std::size_t originals = 0;
  std::size_t synthetics = 0;
  ForEachJsonLine(text, [&](const nlohmann::json& json, std::size_t line_no) {
    ManifestRow row;
    row.id = json.at("id").get<std::string>();
    row.audio = json.at("audio").get<std::string>();
    row.transcript = json.at("transcript").get<std::string>();
    const std::string origin = json.at("origin").get<std::string>();
    if (origin == "original") {
      row.origin = Origin::kOriginal;
      ++originals;
    } else if (origin == "synthetic") {
      row.origin = Origin::kSynthetic;
      ++synthetics;
    } else {
      throw ParseError("unknown origin '" + origin + "'", line_no);
    }
    manifest.entries.push_back(std::move(row));
  });
  manifest.ratio = originals == 0 ? 0.0
                                  : static_cast<double>(synthetics) /
                                        static_cast<double>(originals);
  return manifest;
}

}  // namespace glossaug
