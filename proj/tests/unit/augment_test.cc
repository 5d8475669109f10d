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

#include "glossaug/augment.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "glossaug/error.h"
#include "glossaug/lexicon.h"
#include "glossaug/rng.h"
#include "test_util.h"

namespace glossaug {
namespace {

using ::testing::ElementsAre;

Utterance Glossed(const std::string& id, std::vector<std::string> words,
                  std::vector<std::string> glosses) {
  Utterance u;
  u.id = id;
  u.speaker = "s";
  u.text_tokens = std::move(words);
  u.gloss_tokens = std::move(glosses);
  return u;
}

// Upper-tail p-value of Pearson's statistic against equal expected counts.
double ChiSquareUniformP(const std::vector<std::size_t>& counts) {
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  const double expected = static_cast<double>(total) / counts.size();
  double stat = 0.0;
  for (std::size_t c : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(GlossReplaceTest, SingletonSetsAreIdentity) {
  const Utterance u = Glossed("u", {"a", "b"}, {"A", "B"});
  const GlossLexicon lex({{"A", {"a"}}, {"B", {"b"}}}, "t");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    EXPECT_THAT(GlossReplace(u, lex, rng).tokens, ElementsAre("a", "b"));
  }
}

TEST(GlossReplaceTest, TwoOutcomeSpaceIsCoveredExactly) {
  const Utterance u = Glossed("u", {"w1", "w2"}, {"G1", "G2"});
  const GlossLexicon lex({{"G1", {"w1", "wa"}}, {"G2", {"w2"}}}, "t");
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const AugmentedSentence s = GlossReplace(u, lex, rng);
    EXPECT_EQ(s.gloss_tokens, u.gloss_tokens);
    EXPECT_EQ(s.method, AugmentMethod::kGloss);
    EXPECT_EQ(s.origin_id, "u");
    seen.insert(s.tokens);
  }
  EXPECT_EQ(seen, (std::set<std::vector<std::string>>{{"w1", "w2"}, {"wa", "w2"}}));
}

TEST(GlossReplaceTest, UniformOverTwoWords) {
  const Utterance u = Glossed("u", {"w1"}, {"G1"});
  const GlossLexicon lex({{"G1", {"w1", "wa"}}}, "t");
  std::vector<std::size_t> counts(2);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng = SubstreamRng(17, i);
    ++counts[GlossReplace(u, lex, rng).tokens[0] == "wa" ? 1 : 0];
  }
  const double freq = counts[1] / 10000.0;
  EXPECT_GE(freq, 0.47);
  EXPECT_LE(freq, 0.53);
  EXPECT_GT(ChiSquareUniformP(counts), 0.01);
}

TEST(GlossReplaceTest, MissingGlossNamesTheGloss) {
  const Utterance u = Glossed("u", {"a"}, {"NOPE"});
  Rng rng(0);
  try {
    GlossReplace(u, GlossLexicon({{"A", {"a"}}}, "t"), rng);
    FAIL() << "expected MissingGlossError";
  } catch (const MissingGlossError& e) {
    EXPECT_EQ(e.gloss(), "NOPE");
  }
}

TEST(GlossReplaceTest, PlaceholderGlossKeepsWord) {
  const Utterance u = Glossed("u", {"zz", "a"}, {"_", "A"});
  Rng rng(0);
  const AugmentedSentence s = GlossReplace(u, GlossLexicon({{"A", {"a", "b"}}}, "t"), rng);
  EXPECT_EQ(s.tokens[0], "zz");
}

TEST(RandomReplaceTest, SingleWordVocabulary) {
  const Utterance u = Glossed("u", {"a", "b", "c"}, {"A", "B", "C"});
  const std::vector<std::string> vocab = {"w"};
  Rng rng(1);
  const AugmentedSentence s = RandomReplace(u, vocab, rng);
  EXPECT_THAT(s.tokens, ElementsAre("w", "w", "w"));
  EXPECT_FALSE(s.gloss_tokens);
  EXPECT_EQ(s.method, AugmentMethod::kRandom);
}

TEST(RandomReplaceTest, OutcomeSpaceIsAllTriples) {
  const Utterance u = Glossed("u", {"x", "y", "z"}, {"A", "B", "C"});
  const std::vector<std::string> vocab = {"a", "b"};
  std::set<std::vector<std::string>> seen;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Rng rng(seed);
    const AugmentedSentence s = RandomReplace(u, vocab, rng);
    ASSERT_EQ(s.tokens.size(), 3u);
    seen.insert(s.tokens);
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(RandomReplaceTest, UniformOverTenWords) {
  const Utterance u = Glossed("u", {"x"}, {"X"});
  std::vector<std::string> vocab;
  for (int i = 0; i < 10; ++i) vocab.push_back("v" + std::to_string(i));
  std::vector<std::size_t> counts(10);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Rng rng = SubstreamRng(23, i);
    ++counts[std::stoul(RandomReplace(u, vocab, rng).tokens[0].substr(1))];
  }
  EXPECT_GT(ChiSquareUniformP(counts), 0.01);
}

TEST(RandomReplaceTest, EmptyVocabularyIsAnError) {
  Rng rng(0);
  EXPECT_THROW(RandomReplace(Glossed("u", {"a"}, {"A"}), {}, rng), LexiconError);
}

class AugmentCorpusPropertyTest : public ::testing::TestWithParam<AugmentMethod> {};

TEST_P(AugmentCorpusPropertyTest, InvariantsOnMiniCorpus) {
  const Corpus train = testing::MiniCorpus();
  const GlossLexicon lex = BuildLexicon(train);
  const OrderedWordSet vocab = Vocabulary(train);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    AugmentOptions options;
    options.method = GetParam();
    options.seed = seed;
    const std::vector<AugmentedSentence> out = AugmentCorpus(train, options);
    ASSERT_EQ(out.size(), train.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Utterance& u = train[i];
      EXPECT_EQ(out[i].origin_id, u.id);
      ASSERT_EQ(out[i].tokens.size(), u.text_tokens.size());
      for (std::size_t k = 0; k < out[i].tokens.size(); ++k) {
        EXPECT_TRUE(vocab.Contains(out[i].tokens[k]));
        if (GetParam() == AugmentMethod::kGloss) {
          const auto* candidates = lex.Find((*u.gloss_tokens)[k]);
          ASSERT_NE(candidates, nullptr);
          EXPECT_THAT(*candidates, ::testing::Contains(out[i].tokens[k]));
        }
      }
      if (GetParam() == AugmentMethod::kGloss) {
        EXPECT_EQ(out[i].gloss_tokens, u.gloss_tokens);
      }
    }
  }
}

TEST_P(AugmentCorpusPropertyTest, DeterministicAcrossRunsAndThreads) {
  const Corpus train = testing::MiniCorpus();
  AugmentOptions options;
  options.method = GetParam();
  options.seed = 42;
  const std::string reference = AugmentedToJsonLines(AugmentCorpus(train, options));
  EXPECT_EQ(AugmentedToJsonLines(AugmentCorpus(train, options)), reference);
  for (unsigned threads : {2u, 3u, 8u, 64u}) {
    options.threads = threads;
    EXPECT_EQ(AugmentedToJsonLines(AugmentCorpus(train, options)), reference)
        << threads << " threads";
  }
  options.seed = 43;
  options.threads = 1;
  EXPECT_NE(AugmentedToJsonLines(AugmentCorpus(train, options)), reference);
}

INSTANTIATE_TEST_SUITE_P(Methods, AugmentCorpusPropertyTest,
                         ::testing::Values(AugmentMethod::kGloss, AugmentMethod::kRandom),
                         [](const auto& info) { return std::string(ToString(info.param)); });

TEST(AugmentCorpusTest, AllSingletonLexiconReproducesTrain) {
  const Corpus train("t", TranscriptionMode::kOrthographic,
                     {Glossed("a", {"x", "y"}, {"X", "Y"}), Glossed("b", {"y"}, {"Y"})});
  const std::vector<AugmentedSentence> out = AugmentCorpus(train, {});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].tokens, train[0].text_tokens);
  EXPECT_EQ(out[1].tokens, train[1].text_tokens);
}

TEST(AugmentCorpusTest, GlossMethodNeedsGlossesThroughout) {
  Utterance bare;
  bare.id = "bare";
  bare.speaker = "s";
  bare.text_tokens = {"a"};
  const Corpus train("t", TranscriptionMode::kOrthographic,
                     {Glossed("a", {"x"}, {"X"}), bare});
  try {
    AugmentCorpus(train, {});
    FAIL() << "expected LexiconError";
  } catch (const LexiconError& e) {
    EXPECT_THAT(e.what(), ::testing::HasSubstr("bare"));
  }
  AugmentOptions random;
  random.method = AugmentMethod::kRandom;
  EXPECT_EQ(AugmentCorpus(train, random).size(), 2u);
  EXPECT_THROW(AugmentCorpus(Corpus(), {}), ConfigError);
}

TEST(AugmentCorpusTest, FrequencyWeightedFollowsTokenCounts) {
  // "a" occurs three times as often as "b".
  const Corpus train("t", TranscriptionMode::kOrthographic,
                     {Glossed("u", {"a", "a", "a", "b"}, {"A", "A", "A", "B"})});
  AugmentOptions options;
  options.method = AugmentMethod::kRandom;
  options.frequency_weighted = true;
  std::size_t a = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    options.seed = seed;
    const std::vector<AugmentedSentence> out = AugmentCorpus(train, options);
    for (const std::string& t : out[0].tokens) {
      a += t == "a";
      ++total;
    }
  }
  EXPECT_NEAR(static_cast<double>(a) / total, 0.75, 0.02);
}

TEST(AugmentCorpusTest, IpaModeDrawsFromIpaStream) {
  Utterance u = Glossed("u", {"ng", "a"}, {"X", "Y"});
  u.ipa_tokens = std::vector<std::string>{"ŋ", "a"};
  const Corpus train("t", TranscriptionMode::kIpa, {u});
  EXPECT_THAT(AugmentCorpus(train, {})[0].tokens, ElementsAre("ŋ", "a"));
}

TEST(AugmentedJsonTest, RoundTrip) {
  const std::vector<AugmentedSentence> in = {
      {"u1", AugmentMethod::kGloss, {"a", "ŋ"}, std::vector<std::string>{"A", "B"}, {0, 1}},
      {"u2", AugmentMethod::kRandom, {"c"}, std::nullopt, {7}},
      {"llm-1", AugmentMethod::kLlm, {"d", "e"}, std::vector<std::string>{"D", "E"}, {}}};
  EXPECT_EQ(ParseAugmentedJsonLines(AugmentedToJsonLines(in)), in);
  EXPECT_THROW(ParseAugmentedJsonLines("{not json}\n"), ParseError);
}

TEST(AugmentMethodTest, Names) {
  EXPECT_EQ(ParseAugmentMethod("random"), AugmentMethod::kRandom);
  EXPECT_EQ(ToString(AugmentMethod::kLlm), "llm");
  EXPECT_THROW(ParseAugmentMethod("frames"), ConfigError);
}

}  // namespace
}  // namespace glossaug
