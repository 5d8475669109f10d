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

#ifndef GLOSSAUG_CONFIG_H_
#define GLOSSAUG_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glossaug/corpus.h"
#include "glossaug/llm.h"
#include "glossaug/metrics.h"

namespace glossaug {

// Voice identifiers used when the config names none.
const std::vector<std::string>& DefaultVoices();

// Endpoint settings before any config: bearer token from GLOSSAUG_LLM_TOKEN.
EndpointConfig DefaultEndpoint();

// Settings shared by every subcommand. Loaded from a key/value file, then
// environment, then command-line flags (later sources win).
struct ToolkitConfig {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  TranscriptionMode transcription_mode = TranscriptionMode::kOrthographic;
  SplitSpec split;
  TokenMode token_mode = TokenMode::kWord;
  std::optional<std::filesystem::path> inventory;
  std::vector<std::string> voices = DefaultVoices();
  EndpointConfig llm = DefaultEndpoint();
  std::string language_name;
  std::string language_description;
  // Free-form [paths] entries, e.g. corpus, train, out.
  std::map<std::string, std::string> paths;

  // Throws ConfigError on bad fractions, voice count, thread count or
  // endpoint settings.
  void Validate() const;
};

// Parses "key = value" lines grouped under "[section]" headers. '#' starts a
// comment; values may be double-quoted. Unknown keys are errors.
ToolkitConfig ParseConfig(std::string_view text);
ToolkitConfig LoadConfig(const std::filesystem::path& path);

// GLOSSAUG_LLM_URL, GLOSSAUG_LLM_TOKEN_ENV, GLOSSAUG_LLM_TIMEOUT_S.
// `getenv` is injectable for tests.
void ApplyEnvironment(
    ToolkitConfig& config,
    const std::function<const char*(const char*)>& getenv_fn = nullptr);

}  // namespace glossaug

#endif  // GLOSSAUG_CONFIG_H_
