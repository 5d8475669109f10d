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

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "glossaug/error.h"

namespace glossaug {
namespace {

std::size_t Draw(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Runs fn(i) for i in [0, n) over `threads` workers in contiguous blocks.
// The first exception (by index) is rethrown.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const std::size_t block = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::size_t begin = t * block;
      const std::size_t end = std::min(n, begin + block);
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace

std::string_view ToString(AugmentMethod method) {
  switch (method) {
    case AugmentMethod::kGloss:
      return "gloss";
    case AugmentMethod::kRandom:
      return "random";
    case AugmentMethod::kLlm:
      return "llm";
  }
  return "gloss";
}

AugmentMethod ParseAugmentMethod(std::string_view name) {
  if (name == "gloss") return AugmentMethod::kGloss;
  if (name == "random") return AugmentMethod::kRandom;
  if (name == "llm") return AugmentMethod::kLlm;
  throw ConfigError("unknown augmentation method '" + std::string(name) + "'");
}

AugmentedSentence GlossReplace(const Utterance& u, const GlossLexicon& lexicon,
                               Rng& rng, TranscriptionMode mode) {
  if (!u.gloss_tokens) {
    throw LexiconError("utterance '" + u.id + "' has no glosses");
  }
  const std::vector<std::string>& words = u.Tokens(mode);
  const std::vector<std::string>& glosses = *u.gloss_tokens;
  AugmentedSentence out{u.id, AugmentMethod::kGloss, {}, glosses, {}};
  out.tokens.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (glosses[i] == kMissingGloss) {
      out.tokens.push_back(words[i]);
      continue;
    }
    const std::vector<std::string>* candidates = lexicon.Find(glosses[i]);
    if (candidates == nullptr) throw MissingGlossError(glosses[i]);
    const std::size_t pick = Draw(rng, candidates->size());
    out.tokens.push_back((*candidates)[pick]);
    out.seed_trace.push_back(pick);
  }
  return out;
}

AugmentedSentence RandomReplace(const Utterance& u,
                                std::span<const std::string> candidates,
                                Rng& rng, TranscriptionMode mode) {
  if (candidates.empty()) throw LexiconError("empty vocabulary");
  const std::size_t length = u.Tokens(mode).size();
  AugmentedSentence out{u.id, AugmentMethod::kRandom, {}, std::nullopt, {}};
  out.tokens.reserve(length);
  out.seed_trace.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t pick = Draw(rng, candidates.size());
    out.tokens.push_back(candidates[pick]);
    out.seed_trace.push_back(pick);
  }
  return out;
}

std::vector<AugmentedSentence> AugmentCorpus(const Corpus& train,
                                             const AugmentOptions& options) {
  if (train.empty()) throw ConfigError("cannot augment an empty training split");
  const TranscriptionMode mode = train.transcription_mode();

  std::optional<GlossLexicon> lexicon;
  std::vector<std::string> pool;
  switch (options.method) {
    case AugmentMethod::kGloss:
      for (const Utterance& u : train.utterances()) {
        if (!u.gloss_tokens) {
          throw LexiconError("utterance '" + u.id +
                             "' has no glosses; gloss replacement needs "
                             "glosses throughout");
        }
      }
      lexicon = BuildLexicon(train);
      break;
    case AugmentMethod::kRandom:
      if (options.frequency_weighted) {
        for (const Utterance& u : train.utterances()) {
          const auto& tokens = train.Tokens(u);
          pool.insert(pool.end(), tokens.begin(), tokens.end());
        }
      } else {
        pool = Vocabulary(train).words();
      }
      break;
    case AugmentMethod::kLlm:
      throw ConfigError("LLM sentences come from ingest-llm, not AugmentCorpus");
  }

  std::vector<AugmentedSentence> out(train.size());
  ParallelFor(train.size(), options.threads, [&](std::size_t i) {
    const Utterance& u = train[i];
    Rng rng = SubstreamRng(options.seed, i);
    try {
      out[i] = options.method == AugmentMethod::kGloss
                   ? GlossReplace(u, *lexicon, rng, mode)
                   : RandomReplace(u, pool, rng, mode);
    } catch (const MissingGlossError& e) {
      throw MissingGlossError(e.gloss(), u.id);
    } catch (const Error& e) {
      throw Error("utterance '" + u.id + "': " + e.what());
    }
  });
  return out;
}

std::string AugmentedToJsonLines(std::span<const AugmentedSentence> sentences) {
  std::string out;
  for (const AugmentedSentence& s : sentences) {
    nlohmann::ordered_json json;
    json["origin_id"] = s.origin_id;
    json["method"] = std::string(ToString(s.method));
    json["tokens"] = s.tokens;
    if (s.gloss_tokens) json["gloss_tokens"] = *s.gloss_tokens;
    json["seed_trace"] = s.seed_trace;
    out += json.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<AugmentedSentence> ParseAugmentedJsonLines(std::string_view text) {
  std::vector<AugmentedSentence> sentences;
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
      AugmentedSentence s;
      s.origin_id = json.at("origin_id").get<std::string>();
      s.method = ParseAugmentMethod(json.at("method").get<std::string>());
      s.tokens = json.at("tokens").get<std::vector<std::string>>();
      if (json.contains("gloss_tokens") && !json["gloss_tokens"].is_null()) {
        s.gloss_tokens = json["gloss_tokens"].get<std::vector<std::string>>();
      }
      s.seed_trace =
          json.value("seed_trace", std::vector<std::uint64_t>{});
      if (s.tokens.empty()) throw ParseError("sentence without tokens", line_no);
      sentences.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return sentences;
}

}  // namespace glossaug
