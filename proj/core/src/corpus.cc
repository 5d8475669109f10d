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

#include "glossaug/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <nlohmann/json.hpp>

#include "glossaug/delimited.h"
#include "glossaug/error.h"
#include "glossaug/rng.h"
#include "glossaug/unicode.h"

namespace glossaug {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kMetadataPrefix = "#glossaug ";
constexpr std::string_view kTranslationPrefix = "translation_";

std::string CleanField(std::string_view raw) {
  return std::string(unicode::Trim(unicode::ToNfc(raw)));
}

std::optional<std::vector<std::string>> OptionalTokens(std::string_view raw) {
  std::vector<std::string> tokens = TokenizeField(raw);
  if (tokens.empty()) return std::nullopt;
  return tokens;
}

double ParseDuration(std::string_view raw, std::size_t line) {
  const std::string_view text = unicode::Trim(raw);
  if (text.empty()) return 0.0;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ParseError("bad duration '" + std::string(text) + "'", line);
  }
  return value;
}

std::string FormatDuration(double seconds) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), seconds);
  return std::string(buffer, ptr);
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& token : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

// Checks the invariants that depend on per-row context, then the shared ones.
void CheckRow(const Utterance& u, std::size_t line) {
  if (u.id.empty()) throw ParseError("empty id", line);
  if (u.speaker.empty()) {
    throw ParseError("utterance '" + u.id + "': empty speaker", line);
  }
  if (u.text_tokens.empty()) {
    throw ParseError("utterance '" + u.id + "': empty text", line);
  }
  if (u.duration_s < 0.0) {
    throw ParseError("utterance '" + u.id + "': negative duration", line);
  }
  u.Validate();
}

struct Metadata {
  std::string name;
  TranscriptionMode mode;
};

Metadata ApplyMetadata(const ordered_json& meta, Metadata base,
                       std::size_t line) {
  try {
    if (meta.contains("corpus")) base.name = meta.at("corpus").get<std::string>();
    if (meta.contains("transcription_mode")) {
      base.mode = ParseTranscriptionMode(
          meta.at("transcription_mode").get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad corpus metadata: ") + e.what(), line);
  } catch (const ConfigError& e) {
    throw ParseError(e.what(), line);
  }
  return base;
}

bool NeedsMetadata(const Corpus& corpus) {
  return !corpus.name().empty() ||
         corpus.transcription_mode() != TranscriptionMode::kOrthographic;
}

ordered_json MetadataJson(const Corpus& corpus) {
  ordered_json meta;
  meta["corpus"] = corpus.name();
  meta["transcription_mode"] = std::string(ToString(corpus.transcription_mode()));
  return meta;
}

Corpus ParseDelimitedCorpus(std::string_view source,
                            const ParseOptions& options) {
  std::vector<std::string> comments;
  const char delimiter =
      options.delimiter != 0 ? options.delimiter : SniffDelimiter(source);
  const DelimitedTable table = ReadDelimited(source, delimiter, &comments);

  Metadata meta{options.name, options.mode};
  for (const std::string& comment : comments) {
    if (comment.rfind(kMetadataPrefix, 0) != 0) continue;
    ordered_json parsed = ordered_json::parse(
        comment.substr(kMetadataPrefix.size()), nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) {
      throw ParseError("bad corpus metadata line", 1);
    }
    meta = ApplyMetadata(parsed, meta, 1);
  }

  if (table.header.empty()) return Corpus(meta.name, meta.mode, {});
  for (const char* required : {"id", "speaker", "text"}) {
    if (table.Column(required) == std::string_view::npos) {
      throw ParseError(std::string("missing required column '") + required + "'",
                       1);
    }
  }
  const std::size_t id_col = table.Column("id");
  const std::size_t speaker_col = table.Column("speaker");
  const std::size_t text_col = table.Column("text");
  const std::size_t audio_col = table.Column("audio");
  const std::size_t duration_col = table.Column("duration_s");
  const std::size_t ipa_col = table.Column("ipa");
  const std::size_t gloss_col = table.Column("gloss");
  const std::size_t pos_col = table.Column("pos");
  std::vector<std::pair<std::string, std::size_t>> translation_cols;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    const std::string& name = table.header[c];
    if (name.rfind(kTranslationPrefix, 0) == 0 &&
        name.size() > kTranslationPrefix.size()) {
      translation_cols.emplace_back(name.substr(kTranslationPrefix.size()), c);
    }
  }
  constexpr std::size_t npos = std::string_view::npos;

  std::vector<Utterance> utterances;
  utterances.reserve(table.rows.size());
  std::unordered_set<std::string> seen;
  for (const DelimitedRecord& row : table.rows) {
    const auto& f = row.fields;
    Utterance u;
    u.id = CleanField(f[id_col]);
    u.speaker = CleanField(f[speaker_col]);
    if (audio_col != npos) u.audio_ref = CleanField(f[audio_col]);
    if (duration_col != npos) u.duration_s = ParseDuration(f[duration_col], row.line);
    u.text_tokens = TokenizeField(f[text_col]);
    if (ipa_col != npos) u.ipa_tokens = OptionalTokens(f[ipa_col]);
    if (gloss_col != npos) u.gloss_tokens = OptionalTokens(f[gloss_col]);
    if (pos_col != npos) u.pos_tokens = OptionalTokens(f[pos_col]);
    for (const auto& [code, col] : translation_cols) {
      std::string value = CleanField(f[col]);
      if (!value.empty()) u.translations[code] = std::move(value);
    }
    CheckRow(u, row.line);
    if (!seen.insert(u.id).second) throw DuplicateIdError(u.id);
    utterances.push_back(std::move(u));
  }
  return Corpus(std::move(meta.name), meta.mode, std::move(utterances));
}

std::vector<std::string> JsonTokens(const ordered_json& value,
                                    std::size_t line) {
  if (value.is_null()) return {};
  if (value.is_string()) return TokenizeField(value.get<std::string>());
  if (!value.is_array()) throw ParseError("token list must be an array", line);
  std::vector<std::string> tokens;
  tokens.reserve(value.size());
  for (const ordered_json& item : value) {
    if (!item.is_string()) throw ParseError("token must be a string", line);
    std::string token = CleanField(item.get<std::string>());
    if (token.empty()) throw ParseError("empty token", line);
    if (TokenizeField(token).size() != 1) {
      throw ParseError("token '" + token + "' contains whitespace", line);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::string JsonString(const ordered_json& object, const char* key,
                       std::size_t line) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw ParseError(std::string("field '") + key + "' must be a string", line);
  }
  return CleanField(it->get<std::string>());
}

Corpus ParseJsonLinesCorpus(std::string_view source,
                            const ParseOptions& options) {
  Metadata meta{options.name, options.mode};
  std::vector<Utterance> utterances;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (unicode::FindInvalidUtf8(line)) throw ParseError("invalid UTF-8", line_no);
    if (unicode::Trim(line).empty()) continue;

    ordered_json object = ordered_json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      throw ParseError("not a JSON object", line_no);
    }
    if (!object.contains("id") && object.contains("corpus")) {
      if (!utterances.empty()) {
        throw ParseError("corpus metadata after first utterance", line_no);
      }
      meta = ApplyMetadata(object, meta, line_no);
      continue;
    }
    for (const char* required : {"id", "speaker", "text"}) {
      if (!object.contains(required)) {
        throw ParseError(std::string("missing key '") + required + "'", line_no);
      }
    }
    Utterance u;
    u.id = JsonString(object, "id", line_no);
    u.speaker = JsonString(object, "speaker", line_no);
    u.audio_ref = JsonString(object, "audio", line_no);
    if (auto it = object.find("duration_s"); it != object.end() && !it->is_null()) {
      if (!it->is_number()) throw ParseError("duration_s must be a number", line_no);
      u.duration_s = it->get<double>();
    }
    u.text_tokens = JsonTokens(object["text"], line_no);
    for (auto [key, field] :
         {std::pair{"ipa", &u.ipa_tokens}, std::pair{"gloss", &u.gloss_tokens},
          std::pair{"pos", &u.pos_tokens}}) {
      if (auto it = object.find(key); it != object.end()) {
        std::vector<std::string> tokens = JsonTokens(*it, line_no);
        if (!tokens.empty()) *field = std::move(tokens);
      }
    }
    for (const auto& [key, value] : object.items()) {
      if (key.rfind(kTranslationPrefix, 0) != 0 ||
          key.size() == kTranslationPrefix.size()) {
        continue;
      }
      std::string text = JsonString(object, key.c_str(), line_no);
      if (!text.empty()) {
        u.translations[key.substr(kTranslationPrefix.size())] = std::move(text);
      }
    }
    CheckRow(u, line_no);
    if (!seen.insert(u.id).second) throw DuplicateIdError(u.id);
    utterances.push_back(std::move(u));
  }
  return Corpus(std::move(meta.name), meta.mode, std::move(utterances));
}

// translation_<code> columns beyond the canonical two, sorted.
std::vector<std::string> ExtraTranslationCodes(const Corpus& corpus) {
  std::set<std::string> codes;
  for (const Utterance& u : corpus.utterances()) {
    for (const auto& [code, text] : u.translations) {
      if (code != "en" && code != "other") codes.insert(code);
    }
  }
  return {codes.begin(), codes.end()};
}

std::string SerializeDelimited(const Corpus& corpus,
                               const SerializeOptions& options) {
  std::string out;
  if (options.metadata && NeedsMetadata(corpus)) {
    out += kMetadataPrefix;
    out += MetadataJson(corpus).dump();
    out.push_back('\n');
  }
  const std::vector<std::string> extra = ExtraTranslationCodes(corpus);
  std::vector<std::string> header = DelimitedColumns();
  for (const std::string& code : extra) {
    header.push_back(std::string(kTranslationPrefix) + code);
  }
  AppendDelimitedRow(out, header, options.delimiter);

  auto translation = [](const Utterance& u, const std::string& code) {
    auto it = u.translations.find(code);
    return it == u.translations.end() ? std::string() : it->second;
  };
  auto optional_join = [](const std::optional<std::vector<std::string>>& t) {
    return t ? JoinTokens(*t) : std::string();
  };
  std::vector<std::string> fields;
  for (const Utterance& u : corpus.utterances()) {
    fields = {u.id,
              u.speaker,
              u.audio_ref,
              FormatDuration(u.duration_s),
              JoinTokens(u.text_tokens),
              optional_join(u.ipa_tokens),
              optional_join(u.gloss_tokens),
              optional_join(u.pos_tokens),
              translation(u, "en"),
              translation(u, "other")};
    for (const std::string& code : extra) fields.push_back(translation(u, code));
    AppendDelimitedRow(out, fields, options.delimiter);
  }
  return out;
}

std::string SerializeJsonLines(const Corpus& corpus,
                               const SerializeOptions& options) {
  std::string out;
  if (options.metadata && NeedsMetadata(corpus)) {
    out += MetadataJson(corpus).dump();
    out.push_back('\n');
  }
  for (const Utterance& u : corpus.utterances()) {
    ordered_json object;
    object["id"] = u.id;
    object["speaker"] = u.speaker;
    object["audio"] = u.audio_ref;
    object["duration_s"] = u.duration_s;
    object["text"] = u.text_tokens;
    if (u.ipa_tokens) object["ipa"] = *u.ipa_tokens;
    if (u.gloss_tokens) object["gloss"] = *u.gloss_tokens;
    if (u.pos_tokens) object["pos"] = *u.pos_tokens;
    for (const auto& [code, text] : u.translations) {
      object[std::string(kTranslationPrefix) + code] = text;
    }
    out += object.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace

std::string_view ToString(TranscriptionMode mode) {
  return mode == TranscriptionMode::kIpa ? "ipa" : "orthographic";
}

TranscriptionMode ParseTranscriptionMode(std::string_view name) {
  if (name == "orthographic") return TranscriptionMode::kOrthographic;
  if (name == "ipa") return TranscriptionMode::kIpa;
  throw ConfigError("unknown transcription mode '" + std::string(name) + "'");
}

void Utterance::Validate() const {
  if (id.empty()) throw ParseError("utterance with empty id", 0);
  if (speaker.empty()) throw ParseError("utterance '" + id + "': empty speaker", 0);
  if (text_tokens.empty()) throw ParseError("utterance '" + id + "': empty text", 0);
  if (!(duration_s >= 0.0)) {
    throw ParseError("utterance '" + id + "': negative duration", 0);
  }
  for (const std::string& token : text_tokens) {
    if (token.empty()) throw ParseError("utterance '" + id + "': empty token", 0);
  }
  const std::pair<const char*, const std::optional<std::vector<std::string>>*>
      streams[] = {{"gloss", &gloss_tokens}, {"pos", &pos_tokens},
                   {"ipa", &ipa_tokens}};
  for (const auto& [name, stream] : streams) {
    if (*stream && (*stream)->size() != text_tokens.size()) {
      throw AlignmentError(id, name, text_tokens.size(), (*stream)->size());
    }
  }
}

const std::vector<std::string>& Utterance::Tokens(TranscriptionMode mode) const {
  if (mode == TranscriptionMode::kIpa && ipa_tokens) return *ipa_tokens;
  return text_tokens;
}

Corpus::Corpus(std::string name, TranscriptionMode mode,
               std::vector<Utterance> utterances)
    : name_(std::move(name)), mode_(mode), utterances_(std::move(utterances)) {
  std::unordered_set<std::string_view> ids;
  ids.reserve(utterances_.size());
  for (const Utterance& u : utterances_) {
    u.Validate();
    if (!ids.insert(u.id).second) throw DuplicateIdError(u.id);
  }
}

const std::vector<std::string>& DelimitedColumns() {
  static const std::vector<std::string> columns = {
      "id",  "speaker", "audio", "duration_s",     "text",
      "ipa", "gloss",   "pos",   "translation_en", "translation_other"};
  return columns;
}

std::vector<std::string> TokenizeField(std::string_view field) {
  return unicode::SplitWhitespace(unicode::ToNfc(field));
}

Corpus ParseCorpus(std::string_view source, CorpusFormat format,
                   const ParseOptions& options) {
  return format == CorpusFormat::kJsonLines
             ? ParseJsonLinesCorpus(source, options)
             : ParseDelimitedCorpus(source, options);
}

std::string SerializeCorpus(const Corpus& corpus, CorpusFormat format,
                            const SerializeOptions& options) {
  return format == CorpusFormat::kJsonLines ? SerializeJsonLines(corpus, options)
                                            : SerializeDelimited(corpus, options);
}

CorpusFormat FormatForPath(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  return ext == ".jsonl" || ext == ".json" ? CorpusFormat::kJsonLines
                                           : CorpusFormat::kDelimited;
}

Corpus ReadCorpusFile(const std::filesystem::path& path, ParseOptions options) {
  if (options.name.empty()) options.name = path.stem().string();
  try {
    return ParseCorpus(ReadFile(path), FormatForPath(path), options);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

void WriteCorpusFile(const Corpus& corpus, const std::filesystem::path& path) {
  WriteFile(path, SerializeCorpus(corpus, FormatForPath(path)));
}

void SplitSpec::Validate() const {
  for (double f : {train_fraction, val_fraction, test_fraction}) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw ConfigError("split fractions must lie in [0, 1]");
    }
  }
  const double sum = train_fraction + val_fraction + test_fraction;
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream message;
    message << "split fractions sum to " << sum << ", expected 1";
    throw ConfigError(message.str());
  }
}

CorpusSplits SplitCorpus(const Corpus& corpus, const SplitSpec& spec) {
  spec.Validate();
  if (corpus.empty()) throw ConfigError("cannot split an empty corpus");
  const std::size_t n = corpus.size();
  const auto rounded = [n](double fraction) {
    return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  };
  const std::size_t n_val = std::min(rounded(spec.val_fraction), n);
  const std::size_t n_test = std::min(rounded(spec.test_fraction), n - n_val);

  // Rank positions by a keyed hash; ties (astronomically rare) by position.
  std::vector<std::pair<std::uint64_t, std::size_t>> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = {StreamKey(spec.seed, i), i};
  std::sort(order.begin(), order.end());

  enum Bucket : unsigned char { kTrain, kVal, kTest };
  std::vector<Bucket> bucket(n, kTrain);
  for (std::size_t r = 0; r < n_val; ++r) bucket[order[r].second] = kVal;
  for (std::size_t r = n_val; r < n_val + n_test; ++r) {
    bucket[order[r].second] = kTest;
  }

  std::vector<Utterance> parts[3];
  for (std::size_t i = 0; i < n; ++i) parts[bucket[i]].push_back(corpus[i]);
  const TranscriptionMode mode = corpus.transcription_mode();
  auto part_name = [&corpus](const char* part) {
    return corpus.name().empty() ? std::string(part)
                                 : corpus.name() + "." + part;
  };
  return CorpusSplits{Corpus(part_name("train"), mode, std::move(parts[kTrain])),
                      Corpus(part_name("val"), mode, std::move(parts[kVal])),
                      Corpus(part_name("test"), mode, std::move(parts[kTest]))};
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("short write to " + path.string());
}

}  // namespace glossaug
