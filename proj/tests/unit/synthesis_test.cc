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
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "glossaug/config.h"
#include "glossaug/error.h"
#include "test_util.h"

namespace glossaug {
namespace {

using ::testing::HasSubstr;

std::vector<AugmentedSentence> Sentences(std::size_t n) {
  std::vector<AugmentedSentence> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({"o" + std::to_string(i), AugmentMethod::kGloss,
                   {"w" + std::to_string(i), "x"}, std::nullopt, {}});
  }
  return out;
}

std::map<std::string, std::size_t> PerVoice(const std::vector<SynthesisEntry>& entries) {
  std::map<std::string, std::size_t> counts;
  for (const SynthesisEntry& e : entries) ++counts[e.voice];
  return counts;
}

std::map<std::string, std::string> IndexFor(const std::vector<SynthesisEntry>& entries) {
  std::map<std::string, std::string> index;
  for (const SynthesisEntry& e : entries) index[e.id] = "synth/" + e.id + ".wav";
  return index;
}

TEST(AssignVoicesTest, FiveSentencesUseEachVoiceOnce) {
  const auto entries = AssignVoices(Sentences(5), DefaultVoices());
  const auto counts = PerVoice(entries);
  EXPECT_EQ(counts.size(), 5u);
  for (const auto& [voice, count] : counts) EXPECT_EQ(count, 1u) << voice;
}

TEST(AssignVoicesTest, TwelveSentencesRoundRobin) {
  const auto entries = AssignVoices(Sentences(12), DefaultVoices());
  std::vector<std::size_t> counts;
  for (const std::string& voice : DefaultVoices()) counts.push_back(PerVoice(entries)[voice]);
  EXPECT_THAT(counts, ::testing::ElementsAre(3, 3, 2, 2, 2));
  EXPECT_EQ(entries[0].id, "o0-gloss-0");
  EXPECT_EQ(entries[0].text, "w0 x");
  EXPECT_EQ(entries[7].voice, DefaultVoices()[2]);
  EXPECT_EQ(entries[7].sample_rate, 16000);
}

TEST(AssignVoicesTest, BalanceProperty) {
  for (std::size_t n = 1; n < 60; ++n) {
    const auto counts = PerVoice(AssignVoices(Sentences(n), DefaultVoices()));
    std::size_t lo = n;
    std::size_t hi = 0;
    for (const std::string& voice : DefaultVoices()) {
      const auto it = counts.find(voice);
      const std::size_t c = it == counts.end() ? 0 : it->second;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    EXPECT_LE(hi - lo, 1u) << n;
  }
}

TEST(AssignVoicesTest, DeterministicManifest) {
  const auto s = Sentences(9);
  EXPECT_EQ(EmitManifest(AssignVoices(s, DefaultVoices())),
            EmitManifest(AssignVoices(s, DefaultVoices())));
}

TEST(AssignVoicesTest, RejectsBadVoiceLists) {
  const std::vector<std::string> four = {"a", "b", "c", "d"};
  const std::vector<std::string> dup = {"a", "b", "c", "d", "a"};
  EXPECT_THROW(AssignVoices(Sentences(3), four), ConfigError);
  EXPECT_THROW(AssignVoices(Sentences(3), dup), ConfigError);
  EXPECT_THROW(AssignVoices({}, DefaultVoices()), ConfigError);
}

TEST(ManifestTest, RoundTrip) {
  const auto entries = AssignVoices(Sentences(7), DefaultVoices());
  const std::string text = EmitManifest(entries);
  EXPECT_EQ(ParseManifest(text), entries);
  EXPECT_THAT(text, HasSubstr("\"sample_rate\":16000"));
  EXPECT_THAT(text, HasSubstr("\"voice\":\"af_heart\""));
  EXPECT_THROW(ParseManifest("{\"id\":\"a\",\"text\":\"b\",\"voice\":\"v\","
                             "\"method\":\"gloss\",\"sample_rate\":8000}\n"),
               ParseError);
}

TEST(AudioIndexTest, RoundTripAndDuplicates) {
  const std::map<std::string, std::string> index = {{"a", "x.wav"}, {"b", "y.wav"}};
  EXPECT_EQ(ParseAudioIndex(EmitAudioIndex(index)), index);
  EXPECT_THROW(ParseAudioIndex("{\"id\":\"a\",\"audio\":\"1\"}\n{\"id\":\"a\",\"audio\":\"2\"}\n"),
               ParseError);
}

TEST(MixTest, FiftyPlusFifty) {
  const Corpus original = testing::MiniCorpus();
  std::vector<AugmentedSentence> sentences;
  for (const Utterance& u : original.utterances()) {
    sentences.push_back({u.id, AugmentMethod::kGloss, u.text_tokens, u.gloss_tokens, {}});
  }
  const auto entries = AssignVoices(sentences, DefaultVoices());
  const TrainingManifest m = MixTrainingSet(original, IndexFor(entries), entries);
  ASSERT_EQ(m.entries.size(), 100u);
  EXPECT_DOUBLE_EQ(m.ratio, 1.0);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    EXPECT_TRUE(ids.insert(m.entries[i].id).second);
    EXPECT_EQ(m.entries[i].origin, i % 2 == 0 ? Origin::kOriginal : Origin::kSynthetic);
  }
  EXPECT_EQ(m.entries[0].id, original[0].id);
  EXPECT_EQ(m.entries[0].audio, original[0].audio_ref);
  EXPECT_EQ(m.entries[1].id, entries[0].id);
  EXPECT_EQ(m.entries[1].audio, "synth/" + entries[0].id + ".wav");

  const TrainingManifest back = ParseTrainingManifest(EmitTrainingManifest(m));
  EXPECT_EQ(back, m);
}

TEST(MixTest, BaselineNeedsFlag) {
  const Corpus original = testing::MiniTrain();
  EXPECT_THROW(MixTrainingSet(original, {}, {}), ConfigError);
  MixOptions options;
  options.allow_baseline = true;
  const TrainingManifest m = MixTrainingSet(original, {}, {}, options);
  EXPECT_EQ(m.entries.size(), original.size());
  EXPECT_DOUBLE_EQ(m.ratio, 0.0);
}

TEST(MixTest, AboveOneNeedsFlag) {
  Utterance u;
  u.id = "only";
  u.speaker = "s";
  u.text_tokens = {"a"};
  const Corpus original("c", TranscriptionMode::kOrthographic, {u});
  const auto entries = AssignVoices(Sentences(3), DefaultVoices());
  EXPECT_THROW(MixTrainingSet(original, IndexFor(entries), entries), ConfigError);
  MixOptions options;
  options.allow_above_one = true;
  const TrainingManifest m = MixTrainingSet(original, IndexFor(entries), entries, options);
  EXPECT_EQ(m.entries.size(), 4u);
  EXPECT_DOUBLE_EQ(m.ratio, 3.0);
}

TEST(MixTest, MissingAudioListsIds) {
  const Corpus original = testing::MiniTrain();
  const auto entries = AssignVoices(Sentences(3), DefaultVoices());
  auto index = IndexFor(entries);
  index.erase(entries[1].id);
  index.erase(entries[2].id);
  try {
    MixTrainingSet(original, index, entries);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_THAT(e.what(), HasSubstr(entries[1].id));
    EXPECT_THAT(e.what(), HasSubstr(entries[2].id));
    EXPECT_THAT(e.what(), ::testing::Not(HasSubstr(entries[0].id + ",")));
  }
}

TEST(MixTest, SizeAndUniquenessProperty) {
  const Corpus original = testing::MiniTrain();
  for (std::size_t n = 1; n <= original.size(); n += 7) {
    const auto entries = AssignVoices(Sentences(n), DefaultVoices());
    const TrainingManifest m = MixTrainingSet(original, IndexFor(entries), entries);
    EXPECT_EQ(m.entries.size(), original.size() + n);
    std::set<std::string> ids;
    for (const ManifestRow& row : m.entries) ids.insert(row.id);
    EXPECT_EQ(ids.size(), m.entries.size());
  }
}

}  // namespace
}  // namespace glossaug
