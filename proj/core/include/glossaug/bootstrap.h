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

#ifndef GLOSSAUG_BOOTSTRAP_H_
#define GLOSSAUG_BOOTSTRAP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "glossaug/metrics.h"

namespace glossaug {

struct BootstrapOptions {
  std::size_t replicates = 10000;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct SignificanceReport {
  Metric metric = Metric::kWer;
  double rate_a = 0.0;
  double rate_b = 0.0;
  // Mean over replicates of rate_b - rate_a, in percentage points.
  double mean_delta = 0.0;
  double p_value = 1.0;
  bool significant = false;
  std::size_t replicates = 0;
  double alpha = 0.05;
  std::uint64_t seed = 0;

  bool operator==(const SignificanceReport&) const = default;
};

// One-sided paired bootstrap: does system B (`counts_b`) have a lower pooled
// error rate than baseline A? Each replicate resamples N utterance indices
// with replacement from its own (seed, replicate) substream and pools both
// systems' counts over the same draw. p = (#{delta >= 0} + 1) / (B + 1);
// significant iff p < alpha. Throws MetricError on N = 0, mismatched inputs,
// replicates < 1 or alpha outside (0, 1).
SignificanceReport PairedBootstrap(std::span<const AlignmentCounts> counts_a,
                                   std::span<const AlignmentCounts> counts_b,
                                   Metric metric, const BootstrapOptions& options);

// Tokenizes and aligns once, then resamples.
SignificanceReport PairedBootstrap(std::span<const std::string> refs,
                                   std::span<const std::string> hyps_a,
                                   std::span<const std::string> hyps_b,
                                   Metric metric, const BootstrapOptions& options,
                                   const PhonemeInventory* inventory = nullptr);

nlohmann::ordered_json ToJson(const SignificanceReport& report);

}  // namespace glossaug

#endif  // GLOSSAUG_BOOTSTRAP_H_
