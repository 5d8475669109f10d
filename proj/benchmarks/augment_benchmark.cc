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


#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "glossaug/glossaug.h"

namespace {

// 200 word types over 80 glosses.
glossaug::Corpus MakeCorpus(std::size_t utterances) {
  std::mt19937_64 rng(3);
  std::vector<glossaug::Utterance> rows;
  for (std::size_t i = 0; i < utterances; ++i) {
    glossaug::Utterance u;
    u.id = "u" + std::to_string(i);
    u.speaker = "s" + std::to_string(i % 4);
    std::vector<std::string> glosses;
    for (std::size_t k = 0; k < 4 + rng() % 8; ++k) {
      const std::size_t word = rng() % 200;
      u.text_tokens.push_back("w" + std::to_string(word));
      glosses.push_back("G" + std::to_string(word % 80));
    }
    u.gloss_tokens = std::move(glosses);
    rows.push_back(std::move(u));
  }
  return glossaug::Corpus("bench", glossaug::TranscriptionMode::kOrthographic, std::move(rows));
}

void BM_AugmentCorpus(benchmark::State& state) {
  const glossaug::Corpus train = MakeCorpus(static_cast<std::size_t>(state.range(0)));
  glossaug::AugmentOptions options;
  options.method = state.range(1) ? glossaug::AugmentMethod::kGloss
                                  : glossaug::AugmentMethod::kRandom;
  for (auto _ : state) {
    benchmark::DoNotOptimize(glossaug::AugmentCorpus(train, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AugmentCorpus)->Args({1000, 1})->Args({1000, 0})->Unit(benchmark::kMicrosecond);

}  // namespace
