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

#ifndef GLOSSAUG_SYNTHESIS_H_
#define GLOSSAUG_SYNTHESIS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glossaug/augment.h"
#include "glossaug/corpus.h"

namespace glossaug {

inline constexpr int kTargetSampleRate = 16000;
inline constexpr std::size_t kVoiceCount = 5;

// One line of a TTS synthesis manifest.
struct SynthesisEntry {
  std::string id;
  std::string text;
  std::string voice;
  AugmentMethod method = AugmentMethod::kGloss;
  int sample_rate = kTargetSampleRate;

  bool operator==(const SynthesisEntry&) const = default;
};

// Sentence i gets voices[i % 5] and id "<origin_id>-<method>-<i>".
// Throws ConfigError unless exactly five distinct non-empty voices are given,
// and on an empty sentence list.
std::vector<SynthesisEntry> AssignVoices(std::span<const AugmentedSentence> sentences,
                                         std::span<const std::string> voices);

// JSON lines with keys id, text, voice, method, sample_rate.
std::string EmitManifest(std::span<const SynthesisEntry> entries);
std::vector<SynthesisEntry> ParseManifest(std::string_view text);

// JSON lines {"id": ..., "audio": ...} written by a synthesis backend.
std::map<std::string, std::string> ParseAudioIndex(std::string_view text);
std::string EmitAudioIndex(const std::map<std::string, std::string>& index);

enum class Origin { kOriginal, kSynthetic };
std::string_view ToString(Origin origin);

struct ManifestRow {
  std::string id;
  std::string audio;
  std::string transcript;
  Origin origin = Origin::kOriginal;

  bool operator==(const ManifestRow&) const = default;
};

struct TrainingManifest {
  std::vector<ManifestRow> entries;
  // synthetic count / original count.
  double ratio = 0.0;

  bool operator==(const TrainingManifest&) const = default;
};

struct MixOptions {
  // Accept zero synthetic entries (the unaugmented baseline).
  bool allow_baseline = false;
  // Accept more synthetic than original entries.
  bool allow_above_one = false;
};

// All originals plus all synthetics, interleaved original i, synthetic i.
// Throws Error listing every synthetic id missing from `audio_index`;
// ConfigError on an empty original corpus, on zero synthetics without
// allow_baseline, on a ratio above 1 without allow_above_one, and on
// colliding ids.
TrainingManifest MixTrainingSet(const Corpus& original,
                                const std::map<std::string, std::string>& audio_index,
                                std::span<const SynthesisEntry> entries,
                                const MixOptions& options = {});

// JSON lines with keys id, audio, transcript, origin.
std::string EmitTrainingManifest(const TrainingManifest& manifest);
TrainingManifest ParseTrainingManifest(std::string_view text);

}  // namespace glossaug

#endif  // GLOSSAUG_SYNTHESIS_H_
