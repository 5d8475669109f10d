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


#include <vector>

#include <benchmark/benchmark.h>

#include "glossaug/glossaug.h"

namespace {

void BM_PairedBootstrap(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<glossaug::AlignmentCounts> a;
  std::vector<glossaug::AlignmentCounts> b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back({i % 3, 0, 0, 10 - i % 3, 10});
    b.push_back({i % 2, i % 5 == 0, 0, 10 - i % 2 - (i % 5 == 0), 10});
  }
  glossaug::BootstrapOptions options;
  options.replicates = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        glossaug::PairedBootstrap(a, b, glossaug::Metric::kWer, options));
  }
}
BENCHMARK(BM_PairedBootstrap)->Args({100, 1000})->Args({1000, 10000})
    ->Unit(benchmark::kMillisecond);

}  // namespace
