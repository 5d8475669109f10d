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

#include <random>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "glossaug/augment.h"
#include "glossaug/error.h"
#include "glossaug/llm.h"
#include "test_util.h"

namespace glossaug {
namespace {

using ::testing::ElementsAre;

Utterance Glossed(const std::string& id, std::vector<std::string> words,
                  std::vector<std::string> glosses, double duration = 1.0,
                  const std::string& speaker = "s") {
  Utterance u;
  u.id = id;
  u.speaker = speaker;
  u.duration_s = duration;
  u.text_tokens = std::move(words);
  u.gloss_tokens = std::move(glosses);
  return u;
}

Corpus Make(std::vector<Utterance> us) {
  return Corpus("t", TranscriptionMode::kOrthographic, std::move(us));
}

std::vector<std::string> LlmTokens() {
  const LlmValidationReport report = ValidateLlmOutput(
      ReadFile(testing::DataPath("mini_llm_output.txt")), testing::MiniTrain());
  std::vector<std::string> tokens;
  for (const AugmentedSentence& s : report.accepted) {
    tokens.insert(tokens.end(), s.tokens.begin(), s.tokens.end());
  }
  return tokens;
}

TEST(BuildLexiconTest, OneSentence) {
  const GlossLexicon lex = BuildLexicon(Make({Glossed("u", {"wa", "wb"}, {"G1", "G2"})}));
  ASSERT_EQ(lex.size(), 2u);
  EXPECT_THAT(*lex.Find("G1"), ElementsAre("wa"));
  EXPECT_THAT(*lex.Find("G2"), ElementsAre("wb"));
  EXPECT_EQ(lex.Find("G3"), nullptr);
  EXPECT_EQ(lex.source_split_id(), "t");
}

TEST(BuildLexiconTest, MergesAcrossSentencesInFirstOccurrenceOrder) {
  const GlossLexicon lex = BuildLexicon(Make({Glossed("u1", {"wa", "wb"}, {"G1", "G2"}),
                                              Glossed("u2", {"wc", "wa"}, {"G1", "G1"})}));
  EXPECT_THAT(*lex.Find("G1"), ElementsAre("wa", "wc"));
  EXPECT_EQ(lex.entries()[0].gloss, "G1");
  EXPECT_EQ(lex.entries()[1].gloss, "G2");
}

TEST(BuildLexiconTest, MissingGlossPlaceholderSkipped) {
  const GlossLexicon lex = BuildLexicon(Make({Glossed("u", {"wa", "wb"}, {"G1", "_"})}));
  EXPECT_EQ(lex.size(), 1u);
}

TEST(BuildLexiconTest, NoGlossesIsAnError) {
  Utterance u;
  u.id = "u";
  u.speaker = "s";
  u.text_tokens = {"a"};
  EXPECT_THROW(BuildLexicon(Make({u})), LexiconError);
}

TEST(BuildLexiconTest, MiniCorpusHas37Glosses) {
  const GlossLexicon lex = BuildLexicon(testing::MiniCorpus());
  EXPECT_EQ(lex.size(), 37u);
  std::size_t pairs = 0;
  std::vector<std::string> alternatives;
  for (const auto& e : lex.entries()) {
    pairs += e.words.size();
    if (e.words.size() >= 2) alternatives.push_back(e.gloss);
  }
  EXPECT_EQ(pairs, 52u);
  std::sort(alternatives.begin(), alternatives.end());
  EXPECT_THAT(alternatives,
              ElementsAre("1SG", "3PL", "3SG", "LOC", "NEG", "big", "child",
                          "give-PST", "go-PST", "good", "see-PST", "tree", "village",
                          "water"));
  EXPECT_THAT(*lex.Find("1SG"), ::testing::UnorderedElementsAre("ma", "mi"));
  EXPECT_DOUBLE_EQ(AlternativeRate(lex), 100.0 * 14 / 37);
}

TEST(BuildLexiconTest, ClosureProperty) {
  const Corpus train = testing::MiniTrain();
  const GlossLexicon lex = BuildLexicon(train);
  for (const auto& entry : lex.entries()) {
    for (const std::string& word : entry.words) {
      bool seen = false;
      for (const Utterance& u : train.utterances()) {
        for (std::size_t i = 0; i < u.text_tokens.size() && !seen; ++i) {
          seen = u.text_tokens[i] == word && (*u.gloss_tokens)[i] == entry.gloss;
        }
      }
      EXPECT_TRUE(seen) << entry.gloss << " -> " << word;
    }
  }
}

TEST(LexiconTest, RejectsMalformedEntries) {
  EXPECT_THROW(GlossLexicon({{"G", {}}}, "x"), LexiconError);
  EXPECT_THROW(GlossLexicon({{"G", {"a", "a"}}}, "x"), LexiconError);
  EXPECT_THROW(GlossLexicon({{"G", {"a"}}, {"G", {"b"}}}, "x"), LexiconError);
}

TEST(LexiconTest, JsonRoundTrip) {
  const GlossLexicon lex = BuildLexicon(testing::MiniTrain());
  const GlossLexicon back = LexiconFromJson(ToJson(lex));
  ASSERT_EQ(back.size(), lex.size());
  for (std::size_t i = 0; i < lex.size(); ++i) {
    EXPECT_EQ(back.entries()[i].gloss, lex.entries()[i].gloss);
    EXPECT_EQ(back.entries()[i].words, lex.entries()[i].words);
  }
  EXPECT_EQ(back.source_split_id(), lex.source_split_id());
}

TEST(VocabularyTest, FirstOccurrenceOrder) {
  EXPECT_TRUE(Vocabulary(Corpus()).empty());
  Utterance u;
  u.id = "u";
  u.speaker = "s";
  u.text_tokens = {"a", "b", "a"};
  EXPECT_THAT(Vocabulary(Make({u})).words(), ElementsAre("a", "b"));
}

TEST(VocabularyTest, MiniCorpusCounts) {
  EXPECT_EQ(Vocabulary(testing::MiniCorpus()).size(), 52u);
  const OrderedWordSet train = Vocabulary(testing::MiniTrain());
  EXPECT_EQ(train.size(), 48u);
  EXPECT_THAT(std::vector<std::string>(train.words().begin(), train.words().begin() + 4),
              ElementsAre("mi", "kasi", "ilo", "waya"));
}

TEST(VocabularyTest, UsesIpaStreamInIpaMode) {
  Utterance u = Glossed("u", {"ng"}, {"G"});
  u.ipa_tokens = std::vector<std::string>{"ŋ"};
  EXPECT_THAT(Vocabulary(Corpus("c", TranscriptionMode::kIpa, {u})).words(),
              ElementsAre("ŋ"));
}

TEST(AlternativeRateTest, Examples) {
  EXPECT_DOUBLE_EQ(AlternativeRate(GlossLexicon({{"G1", {"w1", "w2"}}, {"G2", {"w3"}}}, "")),
                   50.0);
  EXPECT_DOUBLE_EQ(AlternativeRate(GlossLexicon({{"G1", {"w1"}}, {"G2", {"w3"}}}, "")), 0.0);
  EXPECT_THROW(AlternativeRate(GlossLexicon()), LexiconError);
}

TEST(AlternativeRateTest, InvariantUnderDuplication) {
  const Corpus train = testing::MiniTrain();
  std::vector<Utterance> doubled = train.utterances();
  for (Utterance u : train.utterances()) {
    u.id += "-dup";
    doubled.push_back(u);
  }
  EXPECT_DOUBLE_EQ(AlternativeRate(BuildLexicon(Make(doubled))),
                   AlternativeRate(BuildLexicon(train)));
}

TEST(OovRateTest, Examples) {
  const std::vector<std::string> v = {"a", "b"};
  const OrderedWordSet vocab(v);
  const std::vector<std::string> in = {"a", "b", "a"};
  const std::vector<std::string> half = {"a", "x", "b", "y"};
  EXPECT_DOUBLE_EQ(OovRate(in, vocab), 0.0);
  EXPECT_DOUBLE_EQ(OovRate(half, vocab), 50.0);
  EXPECT_THROW(OovRate({}, vocab), LexiconError);
}

TEST(OovRateTest, TypeCounting) {
  const std::vector<std::string> v = {"a"};
  const std::vector<std::string> tokens = {"a", "a", "a", "x"};
  EXPECT_DOUBLE_EQ(OovRate(tokens, OrderedWordSet(v), OovCounting::kTokens), 25.0);
  EXPECT_DOUBLE_EQ(OovRate(tokens, OrderedWordSet(v), OovCounting::kTypes), 50.0);
}

TEST(OovRateTest, MonotoneUnderFreshReplacement) {
  const OrderedWordSet vocab = Vocabulary(testing::MiniTrain());
  std::vector<std::string> tokens(vocab.words().begin(), vocab.words().end());
  double last = OovRate(tokens, vocab);
  EXPECT_DOUBLE_EQ(last, 0.0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    tokens[i] = "fresh" + std::to_string(i);
    const double now = OovRate(tokens, vocab);
    EXPECT_GE(now, last);
    last = now;
  }
  EXPECT_DOUBLE_EQ(last, 100.0);
}

TEST(CorpusStatsTest, SingleUtterance) {
  const Corpus c = Make({Glossed("u", {"a", "b", "c", "d", "e"},
                                 {"A", "B", "C", "D", "E"}, 60.0)});
  const CorpusStats s = ComputeCorpusStats(c, c);
  EXPECT_DOUBLE_EQ(s.minutes, 1.0);
  EXPECT_EQ(s.speakers, 1u);
  EXPECT_EQ(s.total_words, 5u);
  EXPECT_EQ(s.train_words, 5u);
  EXPECT_EQ(s.gloss_count, 5u);
  EXPECT_DOUBLE_EQ(s.pct_alt, 0.0);
  EXPECT_FALSE(s.pct_out);
}

TEST(CorpusStatsTest, MiniCorpusGoldenRow) {
  const std::vector<std::string> llm = LlmTokens();
  ASSERT_EQ(llm.size(), 16u);
  const CorpusStats s = ComputeCorpusStats(testing::MiniCorpus(), testing::MiniTrain(),
                                           std::span<const std::string>(llm));
  EXPECT_DOUBLE_EQ(s.minutes, 3.3615);
  EXPECT_EQ(s.speakers, 5u);
  EXPECT_EQ(s.total_words, 232u);
  EXPECT_EQ(s.total_unique, 52u);
  EXPECT_EQ(s.train_words, 187u);
  EXPECT_EQ(s.train_unique, 48u);
  EXPECT_EQ(s.gloss_count, 36u);
  EXPECT_DOUBLE_EQ(s.pct_alt, 100.0 / 3.0);
  ASSERT_TRUE(s.pct_out);
  EXPECT_DOUBLE_EQ(*s.pct_out, 62.5);

  const CorpusStats by_type =
      ComputeCorpusStats(testing::MiniCorpus(), testing::MiniTrain(),
                         std::span<const std::string>(llm), OovCounting::kTypes);
  EXPECT_DOUBLE_EQ(*by_type.pct_out, 62.5);
}

TEST(CorpusStatsTest, InvariantsHold) {
  const Corpus full = testing::MiniCorpus();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Corpus train = SplitCorpus(full, SplitSpec{0.8, 0.1, 0.1, seed}).train;
    const CorpusStats s = ComputeCorpusStats(full, train);
    EXPECT_LE(s.train_words, s.total_words);
    EXPECT_LE(s.train_unique, s.total_unique);
    EXPECT_EQ(s.train_unique, Vocabulary(train).size());
    EXPECT_GE(s.pct_alt, 0.0);
    EXPECT_LE(s.pct_alt, 100.0);
  }
}

TEST(CorpusStatsTest, TrainMustBeSubsetOfFull) {
  const Corpus full = Make({Glossed("a", {"x"}, {"X"})});
  const Corpus other = Make({Glossed("b", {"x"}, {"X"})});
  EXPECT_THROW(ComputeCorpusStats(full, other), Error);
}

TEST(CorpusStatsTest, TableMirrorsColumnOrder) {
  const std::string table =
      FormatStatsTable(ComputeCorpusStats(testing::MiniCorpus(), testing::MiniTrain()),
                       "mini");
  const std::vector<std::string> columns = {"Minutes", "Speakers", "Total Words",
                                            "Total Unique", "Train Words",
                                            "Train Unique", "Gloss", "% Alt.", "% Out"};
  std::size_t pos = 0;
  for (const std::string& col : columns) {
    const std::size_t found = table.find(col, pos);
    ASSERT_NE(found, std::string::npos) << col;
    pos = found + col.size();
  }
  EXPECT_THAT(table, ::testing::HasSubstr("33.3"));
  const auto json = ToJson(ComputeCorpusStats(testing::MiniCorpus(), testing::MiniTrain()));
  EXPECT_EQ(json["gloss_count"], 36);
  EXPECT_TRUE(json["pct_out"].is_null());
}

}  // namespace
}  // namespace glossaug
