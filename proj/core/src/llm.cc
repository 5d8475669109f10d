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

#include "glossaug/llm.h"

#include <cstdlib>
#include <optional>
#include <thread>
#include <utility>

#include <httplib.h>

#include "glossaug/delimited.h"
#include "glossaug/error.h"
#include "glossaug/lexicon.h"
#include "glossaug/unicode.h"

namespace glossaug {

const std::string_view kLlmPromptTemplate =
    "Given the following CSV, focus on columns [text, clean_text, english, "
    "gloss] and generate {number of sentences in train} sentences in a CSV "
    "with all of the original columns, consisting of only the new sentences; "
    "this is in {language}, {language description}; do not use Python code to "
    "generate the sentences but rather use your understanding of other "
    "languages as an LLM to generate sentences; make sure that the text and "
    "gloss generated match; this text will be passed on to a TTS model to "
    "generate synthetic audio, to use for additional training data for a "
    "wav2vec2-based ASR model.";

namespace {

void ReplaceOnce(std::string& text, std::string_view from, std::string_view to) {
  const std::size_t pos = text.find(from);
  if (pos != std::string::npos) text.replace(pos, from.size(), to);
}

// Content of the first ``` fence, or the whole text when there is none.
std::string_view StripCodeFence(std::string_view raw) {
  const std::size_t open = raw.find("```");
  if (open == std::string_view::npos) return raw;
  std::size_t body = raw.find('\n', open);
  if (body == std::string_view::npos) return {};
  ++body;
  const std::size_t close = raw.find("```", body);
  return raw.substr(body, close == std::string_view::npos ? std::string_view::npos
                                                          : close - body);
}

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

ParsedUrl SplitUrl(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw ConfigError("endpoint URL '" + url + "' has no scheme");
  }
  const std::size_t slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

bool Transient(int status) { return status == 429 || status >= 500; }

}  // namespace

LlmPromptSpec MakePromptSpec(const Corpus& train, std::string language_name,
                             std::string language_description) {
  SerializeOptions options;
  options.delimiter = ',';
  options.metadata = false;
  return LlmPromptSpec{train.size(), std::move(language_name),
                       std::move(language_description),
                       SerializeCorpus(train, CorpusFormat::kDelimited, options)};
}

std::string BuildLlmPrompt(const LlmPromptSpec& spec) {
  if (spec.sentence_count == 0) {
    throw ConfigError("prompt needs a positive sentence count");
  }
  if (spec.language_name.empty() || spec.language_description.empty()) {
    throw ConfigError("prompt needs a language name and description");
  }
  std::string prompt(kLlmPromptTemplate);
  ReplaceOnce(prompt, "{number of sentences in train}",
              std::to_string(spec.sentence_count));
  ReplaceOnce(prompt, "{language description}", spec.language_description);
  ReplaceOnce(prompt, "{language}", spec.language_name);
  prompt += "\n\n";
  prompt += spec.train_payload;
  return prompt;
}

std::string RequestLlmGeneration(const std::string& prompt,
                                 const EndpointConfig& endpoint) {
  if (endpoint.url.empty()) throw ConfigError("no LLM endpoint URL configured");
  if (endpoint.max_attempts < 1) throw ConfigError("max_attempts must be >= 1");
  const ParsedUrl url = SplitUrl(endpoint.url);

  httplib::Headers headers;
  if (!endpoint.token_env.empty()) {
    const char* token = std::getenv(endpoint.token_env.c_str());
    if (token == nullptr || *token == '\0') {
      throw EndpointError(endpoint.url, "auth token variable " +
                                            endpoint.token_env + " is not set");
    }
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }
  nlohmann::json body{{"prompt", prompt}};
  if (!endpoint.model.empty()) body["model"] = endpoint.model;
  const std::string payload = body.dump();

  httplib::Client client(url.origin);
  if (!client.is_valid()) {
    throw EndpointError(endpoint.url, "unsupported URL (https needs TLS support)");
  }
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::duration<double>(endpoint.timeout_s));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  std::string last_error;
  auto backoff = endpoint.initial_backoff;
  for (int attempt = 1; attempt <= endpoint.max_attempts; ++attempt) {
    httplib::Result result =
        client.Post(url.path, headers, payload, "application/json");
    if (result && result->status >= 200 && result->status < 300) {
      return result->body;
    }
    if (result && !Transient(result->status)) {
      throw EndpointError(endpoint.url,
                          "HTTP " + std::to_string(result->status) + ": " +
                              result->body.substr(0, 200));
    }
    last_error = result ? "HTTP " + std::to_string(result->status)
                        : httplib::to_string(result.error());
    if (attempt < endpoint.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
  }
  throw EndpointError(endpoint.url, "failed after " +
                                        std::to_string(endpoint.max_attempts) +
                                        " attempts; last error: " + last_error);
}

LlmValidationReport ValidateLlmOutput(std::string_view raw, const Corpus& train) {
  const std::string_view body = StripCodeFence(raw);
  if (unicode::Trim(body).empty()) throw ParseError("empty LLM output", 0);
  const DelimitedTable table =
      ReadDelimited(body, SniffDelimiter(body), nullptr, /*strict_width=*/false);

  std::size_t text_col = table.Column("text");
  const std::size_t gloss_col = table.Column("gloss");
  if (train.transcription_mode() == TranscriptionMode::kIpa &&
      table.Column("ipa") != std::string_view::npos) {
    text_col = table.Column("ipa");
  }
  if (text_col == std::string_view::npos || gloss_col == std::string_view::npos) {
    throw ParseError("LLM output lacks 'text' and 'gloss' columns", 1);
  }

  LlmValidationReport report;
  auto reject = [&report](const char* reason) {
    ++report.rejected_count;
    ++report.rejection_reasons[reason];
  };
  std::size_t row_number = 0;
  for (const DelimitedRecord& row : table.rows) {
    ++row_number;
    if (row.fields.size() != table.header.size()) {
      reject("malformed");
      continue;
    }
    std::vector<std::string> tokens = TokenizeField(row.fields[text_col]);
    std::vector<std::string> glosses = TokenizeField(row.fields[gloss_col]);
    if (tokens.empty()) {
      reject("empty_text");
      continue;
    }
    if (tokens.size() != glosses.size()) {
      reject("alignment");
      continue;
    }
    report.accepted.push_back(AugmentedSentence{
        "llm-" + std::to_string(row_number), AugmentMethod::kLlm,
        std::move(tokens), std::move(glosses), {}});
  }
  if (report.accepted.empty()) {
    throw Error("no LLM output row passed validation (" +
                std::to_string(report.rejected_count) + " rejected)");
  }

  std::vector<std::string> all_tokens;
  for (const AugmentedSentence& s : report.accepted) {
    all_tokens.insert(all_tokens.end(), s.tokens.begin(), s.tokens.end());
  }
  report.oov_rate = OovRate(all_tokens, Vocabulary(train));
  return report;
}

nlohmann::ordered_json ToJson(const LlmValidationReport& report) {
  nlohmann::ordered_json json;
  json["accepted_count"] = report.accepted.size();
  json["rejected_count"] = report.rejected_count;
  json["rejection_reasons"] = report.rejection_reasons;
  json["oov_rate"] = report.oov_rate;
  return json;
}

}  // namespace glossaug
