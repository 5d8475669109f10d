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

std::vector<std::string> Sequence(std::mt19937_64& rng, std::size_t len) {
  std::vector<std::string> out(len);
  for (std::string& token : out) token = "w" + std::to_string(rng() % 50);
  return out;
}

void BM_EditDistance(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto ref = Sequence(rng, static_cast<std::size_t>(state.range(0)));
  const auto hyp = Sequence(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(glossaug::EditDistance(ref, hyp));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EditDistance)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_CharacterErrorRate(benchmark::State& state) {
  const std::vector<std::string> refs(100, "xʷaː tʰa ŋa kʼe mbu");
  const std::vector<std::string> hyps(100, "xʷa ta ŋa ke mbu");
  for (auto _ : state) {
    benchmark::DoNotOptimize(glossaug::ErrorRate(refs, hyps, glossaug::Metric::kCer));
  }
}
BENCHMARK(BM_CharacterErrorRate);

}  // namespace
