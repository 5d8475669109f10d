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

#include "glossaug/config.h"

#include <charconv>
#include <cstdlib>
#include <set>

#include "glossaug/error.h"
#include "glossaug/unicode.h"

namespace glossaug {
namespace {

std::string Unquote(std::string_view value) {
  if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
    return std::string(value.substr(1, value.size() - 2));
  }
  return std::string(value);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T result{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), result);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("'" + key + "': expected a number, got '" + value + "'");
  }
  return result;
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string::npos) end = value.size();
    const std::string_view item = unicode::Trim(
        std::string_view(value).substr(start, end - start));
    if (!item.empty()) items.push_back(Unquote(item));
    start = end + 1;
  }
  return items;
}

TokenMode ParseTokenMode(const std::string& value) {
  if (value == "word") return TokenMode::kWord;
  if (value == "character") return TokenMode::kCharacter;
  if (value == "phoneme") return TokenMode::kPhoneme;
  throw ConfigError("unknown tokenization mode '" + value + "'");
}

void Assign(ToolkitConfig& config, const std::string& key,
            const std::string& value) {
  if (key == "seed") {
    config.seed = ParseNumber<std::uint64_t>(key, value);
    config.split.seed = config.seed;
  } else if (key == "threads") {
    config.threads = ParseNumber<unsigned>(key, value);
  } else if (key == "transcription_mode") {
    config.transcription_mode = ParseTranscriptionMode(value);
  } else if (key == "split.train") {
    config.split.train_fraction = ParseNumber<double>(key, value);
  } else if (key == "split.val") {
    config.split.val_fraction = ParseNumber<double>(key, value);
  } else if (key == "split.test") {
    config.split.test_fraction = ParseNumber<double>(key, value);
  } else if (key == "tokenize.mode") {
    config.token_mode = ParseTokenMode(value);
  } else if (key == "tokenize.inventory") {
    config.inventory = value;
  } else if (key == "synthesis.voices") {
    config.voices = SplitList(value);
  } else if (key == "llm.url") {
    config.llm.url = value;
  } else if (key == "llm.token_env") {
    config.llm.token_env = value;
  } else if (key == "llm.model") {
    config.llm.model = value;
  } else if (key == "llm.timeout_s") {
    config.llm.timeout_s = ParseNumber<double>(key, value);
  } else if (key == "llm.max_attempts") {
    config.llm.max_attempts = ParseNumber<int>(key, value);
  } else if (key == "llm.backoff_ms") {
    config.llm.initial_backoff =
        std::chrono::milliseconds(ParseNumber<long>(key, value));
  } else if (key == "llm.language") {
    config.language_name = value;
  } else if (key == "llm.description") {
    config.language_description = value;
  } else if (key.rfind("paths.", 0) == 0) {
    config.paths[key.substr(6)] = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

}  // namespace

const std::vector<std::string>& DefaultVoices() {
  static const std::vector<std::string> voices = {
      "af_heart", "af_bella", "am_michael", "bf_emma", "bm_george"};
  return voices;
}

EndpointConfig DefaultEndpoint() {
  EndpointConfig endpoint;
  endpoint.token_env = "GLOSSAUG_LLM_TOKEN";
  return endpoint;
}

void ToolkitConfig::Validate() const {
  split.Validate();
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (voices.size() != 5) {
    throw ConfigError("exactly 5 voices are required, got " +
                      std::to_string(voices.size()));
  }
  std::set<std::string> distinct(voices.begin(), voices.end());
  if (distinct.size() != voices.size()) throw ConfigError("voices must be distinct");
  if (!(llm.timeout_s > 0.0)) throw ConfigError("llm.timeout_s must be positive");
  if (llm.max_attempts < 1) throw ConfigError("llm.max_attempts must be >= 1");
  if (llm.initial_backoff.count() < 0) {
    throw ConfigError("llm.backoff_ms must be non-negative");
  }
}

ToolkitConfig ParseConfig(std::string_view text) {
  ToolkitConfig config;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    // A '#' outside quotes starts a comment.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = unicode::Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("bad section header", line_no);
      section = std::string(unicode::Trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no);
    std::string key(unicode::Trim(line.substr(0, eq)));
    if (key.empty()) throw ParseError("empty key", line_no);
    if (!section.empty()) key = section + "." + key;
    const std::string value = Unquote(unicode::Trim(line.substr(eq + 1)));
    try {
      Assign(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

ToolkitConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadFile(path));
}

void ApplyEnvironment(ToolkitConfig& config,
                      const std::function<const char*(const char*)>& getenv_fn) {
  auto get = [&](const char* name) -> const char* {
    return getenv_fn ? getenv_fn(name) : std::getenv(name);
  };
  if (const char* url = get("GLOSSAUG_LLM_URL"); url && *url) config.llm.url = url;
  if (const char* name = get("GLOSSAUG_LLM_TOKEN_ENV"); name && *name) {
    config.llm.token_env = name;
  }
  if (const char* timeout = get("GLOSSAUG_LLM_TIMEOUT_S"); timeout && *timeout) {
    config.llm.timeout_s = ParseNumber<double>("GLOSSAUG_LLM_TIMEOUT_S", timeout);
  }
}

}  // namespace glossaug
