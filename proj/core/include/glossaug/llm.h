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

#ifndef GLOSSAUG_LLM_H_
#define GLOSSAUG_LLM_H_

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "glossaug/augment.h"
#include "glossaug/corpus.h"

namespace glossaug {

// Generation prompt template with three placeholders, in order: sentence
// count, language name, language description.
extern const std::string_view kLlmPromptTemplate;

struct LlmPromptSpec {
  std::size_t sentence_count = 0;
  std::string language_name;
  std::string language_description;
  // Training data as comma-separated rows with a header.
  std::string train_payload;
};

// Fills sentence_count from |train| and serializes it as the payload.
LlmPromptSpec MakePromptSpec(const Corpus& train, std::string language_name,
                             std::string language_description);

// Template with placeholders substituted, a blank line, then the payload.
// Throws ConfigError on a zero count or empty language fields.
std::string BuildLlmPrompt(const LlmPromptSpec& spec);

struct EndpointConfig {
  // http:// or https:// URL; the prompt is POSTed as {"prompt": ...}.
  std::string url;
  // Name of the environment variable holding a bearer token; empty for none.
  std::string token_env;
  // Sent as "model" when non-empty.
  std::string model;
  double timeout_s = 120.0;
  // Total attempts, including the first.
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};
};

// POSTs the prompt and returns the response body unmodified. Connection
// failures, timeouts, 429 and 5xx are retried with exponential backoff up to
// max_attempts; other statuses fail immediately. Throws EndpointError.
std::string RequestLlmGeneration(const std::string& prompt,
                                 const EndpointConfig& endpoint);

struct LlmValidationReport {
  std::vector<AugmentedSentence> accepted;
  std::size_t rejected_count = 0;
  std::map<std::string, std::size_t> rejection_reasons;
  double oov_rate = 0.0;
};

// Parses raw model output as the delimited schema (comma or tab, optionally
// inside a ``` fence). Rows with empty text are rejected as "empty_text",
// rows whose text and gloss token counts differ as "alignment", rows with
// the wrong field count as "malformed". Out-of-vocabulary words are kept.
// Throws ParseError if nothing parses and Error if no row is accepted.
LlmValidationReport ValidateLlmOutput(std::string_view raw, const Corpus& train);

nlohmann::ordered_json ToJson(const LlmValidationReport& report);

}  // namespace glossaug

#endif  // GLOSSAUG_LLM_H_
