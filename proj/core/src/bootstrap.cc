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

#include "glossaug/bootstrap.h"

#include <algorithm>
#include <thread>
#include <vector>

#include "glossaug/error.h"
#include "glossaug/rng.h"

namespace glossaug {
namespace {

double PooledRate(std::span<const AlignmentCounts> counts) {
  AlignmentCounts total;
  for (const AlignmentCounts& c : counts) total += c;
  return total.ref_len == 0 ? 0.0
                            : 100.0 * static_cast<double>(total.errors()) /
                                  static_cast<double>(total.ref_len);
}

struct Replicate {
  double delta = 0.0;
  bool not_better = false;  // rate_b >= rate_a
};

}  // namespace

SignificanceReport PairedBootstrap(std::span<const AlignmentCounts> counts_a,
                                   std::span<const AlignmentCounts> counts_b,
                                   Metric metric, const BootstrapOptions& options) {
  const std::size_t n = counts_a.size();
  if (n == 0) throw MetricError("paired bootstrap needs at least one utterance");
  if (counts_b.size() != n) {
    throw MetricError("systems were scored on different numbers of utterances");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (counts_a[i].ref_len != counts_b[i].ref_len) {
      throw MetricError("utterance " + std::to_string(i + 1) +
                        " has different reference lengths for the two systems");
    }
  }
  if (options.replicates < 1) throw MetricError("replicates must be >= 1");
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw MetricError("alpha must lie in (0, 1)");
  }

  std::vector<Replicate> replicates(options.replicates);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      Rng rng = SubstreamRng(options.seed, r);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::int64_t len = 0;
      std::int64_t errors_a = 0;
      std::int64_t errors_b = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = pick(rng);
        len += static_cast<std::int64_t>(counts_a[i].ref_len);
        errors_a += static_cast<std::int64_t>(counts_a[i].errors());
        errors_b += static_cast<std::int64_t>(counts_b[i].errors());
      }
      // Same denominator for both systems, so the sign is exact in integers.
      replicates[r].not_better = errors_b >= errors_a;
      replicates[r].delta =
          len == 0 ? 0.0
                   : 100.0 * static_cast<double>(errors_b - errors_a) /
                         static_cast<double>(len);
    }
  };

  const unsigned threads = std::max(
      1u, std::min<unsigned>(options.threads,
                             static_cast<unsigned>(options.replicates)));
  if (threads == 1) {
    run(0, options.replicates);
  } else {
    std::vector<std::thread> workers;
    const std::size_t block = (options.replicates + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(options.replicates, t * block);
      const std::size_t end = std::min(options.replicates, begin + block);
      workers.emplace_back(run, begin, end);
    }
    for (std::thread& worker : workers) worker.join();
  }

  // Reduce in replicate order so the report is independent of thread count.
  std::size_t not_better = 0;
  double delta_sum = 0.0;
  for (const Replicate& r : replicates) {
    not_better += r.not_better ? 1 : 0;
    delta_sum += r.delta;
  }

  SignificanceReport report;
  report.metric = metric;
  report.rate_a = PooledRate(counts_a);
  report.rate_b = PooledRate(counts_b);
  report.mean_delta = delta_sum / static_cast<double>(options.replicates);
  report.p_value = static_cast<double>(not_better + 1) /
                   static_cast<double>(options.replicates + 1);
  report.significant = report.p_value < options.alpha;
  report.replicates = options.replicates;
  report.alpha = options.alpha;
  report.seed = options.seed;
  return report;
}

SignificanceReport PairedBootstrap(std::span<const std::string> refs,
                                   std::span<const std::string> hyps_a,
                                   std::span<const std::string> hyps_b,
                                   Metric metric, const BootstrapOptions& options,
                                   const PhonemeInventory* inventory) {
  if (refs.empty()) throw MetricError("paired bootstrap needs at least one utterance");
  if (hyps_a.size() != refs.size() || hyps_b.size() != refs.size()) {
    throw MetricError("references, baseline and system must have equal length");
  }
  const std::vector<AlignmentCounts> a =
      UtteranceCountsFor(refs, hyps_a, metric, inventory);
  const std::vector<AlignmentCounts> b =
      UtteranceCountsFor(refs, hyps_b, metric, inventory);
  return PairedBootstrap(a, b, metric, options);
}

nlohmann::ordered_json ToJson(const SignificanceReport& report) {
  nlohmann::ordered_json json;
  json["metric"] = std::string(ToString(report.metric));
  json["rate_a"] = report.rate_a;
  json["rate_b"] = report.rate_b;
  json["mean_delta"] = report.mean_delta;
  json["p_value"] = report.p_value;
  json["significant"] = report.significant;
  json["replicates"] = report.replicates;
  json["alpha"] = report.alpha;
  json["seed"] = report.seed;
  return json;
}

}  // namespace glossaug
