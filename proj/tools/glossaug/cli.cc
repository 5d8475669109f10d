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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "glossaug/glossaug.h"

namespace glossaug::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct GlobalFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
  CLI::Option* seed_option = nullptr;
  CLI::Option* threads_option = nullptr;
};

// Settings resolved from config file, environment and global flags.
struct Context {
  ToolkitConfig config;
  bool json = false;
  std::ostream& out;
  std::ostream& err;
};

// Resolves a path flag, falling back to the config's [paths] section.
fs::path PathOr(const std::string& flag, const Context& ctx, const char* key) {
  if (!flag.empty()) return flag;
  auto it = ctx.config.paths.find(key);
  if (it != ctx.config.paths.end()) return it->second;
  throw CLI::RequiredError(std::string("--") + key);
}

Corpus LoadCorpus(const fs::path& path, const Context& ctx) {
  ParseOptions options;
  options.mode = ctx.config.transcription_mode;
  return ReadCorpusFile(path, options);
}

// A reference or hypothesis file: one utterance per line, optionally
// "id<TAB>text". Blank lines are empty transcripts.
struct TranscriptFile {
  std::vector<std::string> ids;
  std::vector<std::string> texts;
};

TranscriptFile ReadTranscripts(const fs::path& path) {
  const std::string data = ReadFile(path);
  if (auto bad = unicode::FindInvalidUtf8(data)) {
    throw ParseError(path.string() + ": invalid UTF-8 at byte " +
                         std::to_string(*bad),
                     0);
  }
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < data.size()) {
    std::size_t end = data.find('\n', pos);
    if (end == std::string::npos) end = data.size();
    std::string line = data.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = end + 1;
  }
  TranscriptFile file;
  const bool keyed = !lines.empty() && lines.front().find('\t') != std::string::npos;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!keyed) {
      file.texts.push_back(lines[i]);
      continue;
    }
    const std::size_t tab = lines[i].find('\t');
    if (tab == std::string::npos) {
      // Keyed file whose transcript is empty: "id" alone.
      file.ids.push_back(std::string(unicode::Trim(lines[i])));
      file.texts.emplace_back();
    } else {
      file.ids.push_back(std::string(unicode::Trim(lines[i].substr(0, tab))));
      file.texts.push_back(lines[i].substr(tab + 1));
    }
  }
  return file;
}

// Puts `hyps` in the order of `refs` when both carry ids.
std::vector<std::string> PairWith(const TranscriptFile& refs,
                                  const TranscriptFile& hyps,
                                  const std::string& label) {
  if (refs.ids.empty() || hyps.ids.empty()) {
    if (refs.texts.size() != hyps.texts.size()) {
      throw MetricError(label + " has " + std::to_string(hyps.texts.size()) +
                        " lines but the references have " +
                        std::to_string(refs.texts.size()));
    }
    return hyps.texts;
  }
  std::map<std::string, std::string> by_id;
  for (std::size_t i = 0; i < hyps.ids.size(); ++i) {
    if (!by_id.emplace(hyps.ids[i], hyps.texts[i]).second) {
      throw MetricError(label + " repeats id '" + hyps.ids[i] + "'");
    }
  }
  if (by_id.size() != refs.ids.size()) {
    throw MetricError(label + " has " + std::to_string(by_id.size()) +
                      " utterances but the references have " +
                      std::to_string(refs.ids.size()));
  }
  std::vector<std::string> ordered;
  ordered.reserve(refs.ids.size());
  for (const std::string& id : refs.ids) {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw MetricError(label + " lacks utterance '" + id + "'");
    ordered.push_back(it->second);
  }
  return ordered;
}

std::optional<PhonemeInventory> LoadInventory(const std::string& flag,
                                              const Context& ctx) {
  fs::path path = flag;
  if (path.empty() && ctx.config.inventory) path = *ctx.config.inventory;
  if (path.empty()) return std::nullopt;
  return PhonemeInventory::FromText(ReadFile(path));
}

Metric DefaultMetric(const ToolkitConfig& config) {
  switch (config.token_mode) {
    case TokenMode::kCharacter:
      return Metric::kCer;
    case TokenMode::kPhoneme:
      return Metric::kPer;
    case TokenMode::kWord:
      break;
  }
  return Metric::kWer;
}

std::string Percent(double value, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string corpus;
  std::string train;
  std::optional<double> train_fraction;
  std::string llm;
  std::string label;
  bool by_type = false;
};

void AddStats(CLI::App& app, StatsArgs& a) {
  app.add_option("--corpus", a.corpus, "Full corpus (.tsv/.csv or .jsonl)");
  app.add_option("--train", a.train, "Training split; otherwise split --corpus");
  app.add_option("--train-fraction", a.train_fraction,
                 "Train share when splitting; val and test share the rest")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--llm", a.llm,
                 "LLM sentences (JSON lines from ingest-llm) for the % Out column");
  app.add_option("--label", a.label, "Row label (defaults to the corpus name)");
  app.add_flag("--by-type", a.by_type, "Count % Out over word types");
}

int RunStats(const StatsArgs& a, Context& ctx) {
  const Corpus full = LoadCorpus(PathOr(a.corpus, ctx, "corpus"), ctx);
  Corpus train;
  if (!a.train.empty()) {
    train = LoadCorpus(a.train, ctx);
  } else {
    SplitSpec spec = ctx.config.split;
    if (a.train_fraction) {
      spec.train_fraction = *a.train_fraction;
      spec.val_fraction = spec.test_fraction = (1.0 - *a.train_fraction) / 2.0;
    }
    train = SplitCorpus(full, spec).train;
  }
  std::vector<std::string> llm_tokens;
  if (!a.llm.empty()) {
    for (const AugmentedSentence& s : ParseAugmentedJsonLines(ReadFile(a.llm))) {
      llm_tokens.insert(llm_tokens.end(), s.tokens.begin(), s.tokens.end());
    }
  }
  const CorpusStats stats = ComputeCorpusStats(
      full, train,
      a.llm.empty() ? std::nullopt
                    : std::optional<std::span<const std::string>>(llm_tokens),
      a.by_type ? OovCounting::kTypes : OovCounting::kTokens);
  const std::string label = a.label.empty() ? full.name() : a.label;
  if (ctx.json) {
    ordered_json json;
    json["label"] = label;
    json.update(ToJson(stats));
    ctx.out << json.dump(2) << '\n';
  } else {
    ctx.out << FormatStatsTable(stats, label);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  std::string corpus;
  std::string out_dir;
  std::optional<double> train;
  std::optional<double> val;
  std::optional<double> test;
};

void AddSplit(CLI::App& app, SplitArgs& a) {
  app.add_option("--corpus", a.corpus, "Corpus to split");
  app.add_option("--out-dir", a.out_dir, "Directory for <name>.{train,val,test}");
  app.add_option("--train-fraction", a.train);
  app.add_option("--val-fraction", a.val);
  app.add_option("--test-fraction", a.test);
}

int RunSplit(const SplitArgs& a, Context& ctx) {
  const fs::path corpus_path = PathOr(a.corpus, ctx, "corpus");
  const Corpus corpus = LoadCorpus(corpus_path, ctx);
  SplitSpec spec = ctx.config.split;
  if (a.train) spec.train_fraction = *a.train;
  if (a.val) spec.val_fraction = *a.val;
  if (a.test) spec.test_fraction = *a.test;
  const CorpusSplits splits = SplitCorpus(corpus, spec);

  const fs::path dir = PathOr(a.out_dir, ctx, "out_dir");
  const std::string ext = corpus_path.extension().string();
  const std::string stem = corpus_path.stem().string();
  ordered_json json;
  for (const auto& [name, part] :
       {std::pair{"train", &splits.train}, std::pair{"val", &splits.val},
        std::pair{"test", &splits.test}}) {
    const fs::path path = dir / (stem + "." + name + ext);
    WriteCorpusFile(*part, path);
    json[name] = {{"path", path.string()}, {"utterances", part->size()}};
  }
  if (ctx.json) {
    ctx.out << json.dump(2) << '\n';
  } else {
    for (const auto& [name, info] : json.items()) {
      ctx.out << std::left << std::setw(6) << name << std::right << std::setw(7)
              << info["utterances"].get<std::size_t>() << "  "
              << info["path"].get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- lexicon

struct LexiconArgs {
  std::string train;
  std::string out;
};

void AddLexicon(CLI::App& app, LexiconArgs& a) {
  app.add_option("--train", a.train, "Training split");
  app.add_option("--out", a.out, "Write the lexicon as JSON");
}

int RunLexicon(const LexiconArgs& a, Context& ctx) {
  const Corpus train = LoadCorpus(PathOr(a.train, ctx, "train"), ctx);
  const GlossLexicon lexicon = BuildLexicon(train);
  const ordered_json json = ToJson(lexicon);
  if (!a.out.empty()) WriteFile(a.out, json.dump(2) + "\n");
  if (ctx.json) {
    ctx.out << json.dump(2) << '\n';
    return kExitOk;
  }
  std::size_t width = 0;
  for (const auto& e : lexicon.entries()) width = std::max(width, e.gloss.size());
  for (const auto& e : lexicon.entries()) {
    ctx.out << std::left << std::setw(static_cast<int>(width)) << e.gloss << "  ";
    for (std::size_t i = 0; i < e.words.size(); ++i) {
      ctx.out << (i ? " " : "") << e.words[i];
    }
    ctx.out << '\n';
  }
  ctx.out << lexicon.size() << " glosses, " << Percent(AlternativeRate(lexicon), 1)
          << "% with alternatives\n";
  return kExitOk;
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
  std::string method = "gloss";
  std::string train;
  std::string out;
  bool frequency_weighted = false;
};

void AddAugment(CLI::App& app, AugmentArgs& a) {
  app.add_option("--method", a.method, "gloss or random")
      ->check(CLI::IsMember({"gloss", "random"}));
  app.add_option("--train", a.train, "Training split");
  app.add_option("--out", a.out, "Output JSON lines of synthetic sentences");
  app.add_flag("--frequency-weighted", a.frequency_weighted,
               "Random method: sample by training token frequency");
}

int RunAugment(const AugmentArgs& a, Context& ctx) {
  const Corpus train = LoadCorpus(PathOr(a.train, ctx, "train"), ctx);
  AugmentOptions options;
  options.method = ParseAugmentMethod(a.method);
  options.seed = ctx.config.seed;
  options.frequency_weighted = a.frequency_weighted;
  options.threads = ctx.config.threads;
  const std::vector<AugmentedSentence> sentences = AugmentCorpus(train, options);
  const std::string jsonl = AugmentedToJsonLines(sentences);
  const fs::path out = PathOr(a.out, ctx, "out");
  WriteFile(out, jsonl);
  if (ctx.json) {
    ctx.out << ordered_json{{"method", a.method},
                            {"seed", ctx.config.seed},
                            {"sentences", sentences.size()},
                            {"out", out.string()}}
                   .dump(2)
            << '\n';
  } else {
    ctx.out << "wrote " << sentences.size() << " " << a.method
            << " sentences to " << out.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- prompt

struct PromptArgs {
  std::string train;
  std::string language;
  std::string description;
  std::string out;
  bool send = false;
  std::string raw_out;
};

void AddPrompt(CLI::App& app, PromptArgs& a) {
  app.add_option("--train", a.train, "Training split embedded in the prompt");
  app.add_option("--language", a.language, "Language name");
  app.add_option("--description", a.description, "Short language description");
  app.add_option("--out", a.out, "Write the prompt here instead of stdout");
  app.add_flag("--send", a.send, "POST the prompt to the configured endpoint");
  app.add_option("--raw-out", a.raw_out, "Where --send stores the raw response");
}

int RunPrompt(const PromptArgs& a, Context& ctx) {
  const Corpus train = LoadCorpus(PathOr(a.train, ctx, "train"), ctx);
  const std::string language =
      a.language.empty() ? ctx.config.language_name : a.language;
  const std::string description =
      a.description.empty() ? ctx.config.language_description : a.description;
  const std::string prompt =
      BuildLlmPrompt(MakePromptSpec(train, language, description));
  if (!a.out.empty()) {
    WriteFile(a.out, prompt);
  } else if (!a.send) {
    ctx.out << prompt;
  }
  if (a.send) {
    if (a.raw_out.empty()) throw CLI::RequiredError("--raw-out");
    const std::string raw = RequestLlmGeneration(prompt, ctx.config.llm);
    WriteFile(a.raw_out, raw);
    ctx.err << "wrote " << raw.size() << " response bytes to " << a.raw_out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- ingest-llm

struct IngestArgs {
  std::string raw;
  std::string train;
  std::string out;
  std::string report;
};

void AddIngest(CLI::App& app, IngestArgs& a) {
  app.add_option("--raw", a.raw, "Raw model output")->required();
  app.add_option("--train", a.train, "Training split (vocabulary for OOV)");
  app.add_option("--out", a.out, "Accepted sentences as JSON lines");
  app.add_option("--report", a.report, "Validation report JSON");
}

int RunIngest(const IngestArgs& a, Context& ctx) {
  const Corpus train = LoadCorpus(PathOr(a.train, ctx, "train"), ctx);
  const LlmValidationReport report = ValidateLlmOutput(ReadFile(a.raw), train);
  WriteFile(PathOr(a.out, ctx, "out"), AugmentedToJsonLines(report.accepted));
  const ordered_json json = ToJson(report);
  if (!a.report.empty()) WriteFile(a.report, json.dump(2) + "\n");
  if (ctx.json) {
    ctx.out << json.dump(2) << '\n';
  } else {
    ctx.out << "accepted " << report.accepted.size() << ", rejected "
            << report.rejected_count;
    for (const auto& [reason, count] : report.rejection_reasons) {
      ctx.out << " (" << reason << ": " << count << ")";
    }
    ctx.out << ", OOV " << Percent(report.oov_rate, 1) << "%\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- manifest

struct ManifestArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::vector<std::string> voices;
};

void AddManifest(CLI::App& app, ManifestArgs& a) {
  app.add_option("--in", a.inputs, "Synthetic sentence JSON lines (repeatable)")
      ->required();
  app.add_option("--out", a.out, "Synthesis manifest (JSON lines)");
  app.add_option("--voices", a.voices, "Exactly five voice ids")->delimiter(',');
}

int RunManifest(const ManifestArgs& a, Context& ctx) {
  std::vector<AugmentedSentence> sentences;
  for (const std::string& path : a.inputs) {
    std::vector<AugmentedSentence> part = ParseAugmentedJsonLines(ReadFile(path));
    sentences.insert(sentences.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  const std::vector<std::string>& voices =
      a.voices.empty() ? ctx.config.voices : a.voices;
  const std::vector<SynthesisEntry> entries = AssignVoices(sentences, voices);
  const fs::path out = PathOr(a.out, ctx, "manifest");
  WriteFile(out, EmitManifest(entries));
  std::map<std::string, std::size_t> per_voice;
  for (const SynthesisEntry& e : entries) ++per_voice[e.voice];
  if (ctx.json) {
    ctx.out << ordered_json{{"entries", entries.size()},
                            {"voices", per_voice},
                            {"out", out.string()}}
                   .dump(2)
            << '\n';
  } else {
    ctx.out << "wrote " << entries.size() << " entries to " << out.string() << '\n';
    for (const auto& [voice, count] : per_voice) {
      ctx.out << "  " << voice << ": " << count << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- mix

struct MixArgs {
  std::string original;
  std::string manifest;
  std::string audio_index;
  std::string out;
  bool allow_baseline = false;
  bool allow_above_one = false;
};

void AddMix(CLI::App& app, MixArgs& a) {
  app.add_option("--original", a.original, "Original training split");
  app.add_option("--manifest", a.manifest, "Synthesis manifest");
  app.add_option("--audio-index", a.audio_index,
                 "JSON lines {id, audio} produced by the synthesis backend");
  app.add_option("--out", a.out, "Training manifest (JSON lines)");
  app.add_flag("--allow-baseline", a.allow_baseline,
               "Accept zero synthetic entries (unaugmented baseline)");
  app.add_flag("--allow-above-one", a.allow_above_one,
               "Accept more synthetic than original entries");
}

int RunMix(const MixArgs& a, Context& ctx) {
  const Corpus original = LoadCorpus(PathOr(a.original, ctx, "train"), ctx);
  std::vector<SynthesisEntry> entries;
  std::map<std::string, std::string> index;
  if (!a.manifest.empty()) entries = ParseManifest(ReadFile(a.manifest));
  if (!a.audio_index.empty()) index = ParseAudioIndex(ReadFile(a.audio_index));
  MixOptions options;
  options.allow_baseline = a.allow_baseline;
  options.allow_above_one = a.allow_above_one;
  const TrainingManifest manifest = MixTrainingSet(original, index, entries, options);
  if (manifest.ratio > 1.0) {
    ctx.err << "warning: synthetic-to-original ratio " << manifest.ratio
            << " exceeds 1:1\n";
  }
  const fs::path out = PathOr(a.out, ctx, "training_manifest");
  WriteFile(out, EmitTrainingManifest(manifest));
  if (ctx.json) {
    ctx.out << ordered_json{{"entries", manifest.entries.size()},
                            {"ratio", manifest.ratio},
                            {"out", out.string()}}
                   .dump(2)
            << '\n';
  } else {
    ctx.out << "wrote " << manifest.entries.size() << " entries (ratio "
            << manifest.ratio << ") to " << out.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string refs;
  std::string hyps;
  std::string metric;
  std::string inventory;
  std::string out;
};

void AddEvaluate(CLI::App& app, EvaluateArgs& a) {
  app.add_option("--refs", a.refs, "Reference transcripts")->required();
  app.add_option("--hyps", a.hyps, "Hypothesis transcripts")->required();
  app.add_option("--metric", a.metric, "wer, cer or per")
      ->check(CLI::IsMember({"wer", "cer", "per"}));
  app.add_option("--inventory", a.inventory, "Phoneme inventory, one per line");
  app.add_option("--out", a.out, "Write the report JSON here");
}

int RunEvaluate(const EvaluateArgs& a, Context& ctx) {
  const Metric metric =
      a.metric.empty() ? DefaultMetric(ctx.config) : ParseMetric(a.metric);
  const std::optional<PhonemeInventory> inventory = LoadInventory(a.inventory, ctx);
  const TranscriptFile refs = ReadTranscripts(a.refs);
  const std::vector<std::string> hyps =
      PairWith(refs, ReadTranscripts(a.hyps), "hypothesis file");
  const EvalReport report = ErrorRate(refs.texts, hyps, metric,
                                      inventory ? &*inventory : nullptr, refs.ids);
  const ordered_json json = ToJson(report);
  if (!a.out.empty()) WriteFile(a.out, json.dump(2) + "\n");
  if (ctx.json) {
    ctx.out << json.dump(2) << '\n';
  } else {
    const AlignmentCounts t = report.Totals();
    std::string name(ToString(metric));
    std::transform(name.begin(), name.end(), name.begin(), ::toupper);
    ctx.out << name << " " << Percent(report.corpus_rate) << "% [ " << t.errors()
            << " / " << t.ref_len << ", " << t.insertions << " ins, " << t.deletions
            << " del, " << t.substitutions << " sub ] over "
            << report.per_utterance.size() << " utterances\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- significance

struct SignificanceArgs {
  std::string refs;
  std::string baseline;
  std::string system;
  std::string metric;
  std::string inventory;
  std::size_t replicates = 10000;
  double alpha = 0.05;
  std::string out;
};

void AddSignificance(CLI::App& app, SignificanceArgs& a) {
  app.add_option("--refs", a.refs, "Reference transcripts")->required();
  app.add_option("--baseline", a.baseline, "Baseline hypotheses (A)")->required();
  app.add_option("--system", a.system, "System hypotheses (B)")->required();
  app.add_option("--metric", a.metric, "wer, cer or per")
      ->check(CLI::IsMember({"wer", "cer", "per"}));
  app.add_option("--inventory", a.inventory, "Phoneme inventory, one per line");
  app.add_option("--replicates", a.replicates, "Bootstrap replicates")
      ->capture_default_str();
  app.add_option("--alpha", a.alpha, "Significance level")->capture_default_str();
  app.add_option("--out", a.out, "Write the report JSON here");
}

int RunSignificance(const SignificanceArgs& a, Context& ctx) {
  const Metric metric =
      a.metric.empty() ? DefaultMetric(ctx.config) : ParseMetric(a.metric);
  const std::optional<PhonemeInventory> inventory = LoadInventory(a.inventory, ctx);
  const TranscriptFile refs = ReadTranscripts(a.refs);
  const std::vector<std::string> baseline =
      PairWith(refs, ReadTranscripts(a.baseline), "baseline file");
  const std::vector<std::string> system =
      PairWith(refs, ReadTranscripts(a.system), "system file");
  BootstrapOptions options;
  options.replicates = a.replicates;
  options.alpha = a.alpha;
  options.seed = ctx.config.seed;
  options.threads = ctx.config.threads;
  const SignificanceReport report =
      PairedBootstrap(refs.texts, baseline, system, metric, options,
                      inventory ? &*inventory : nullptr);
  const ordered_json json = ToJson(report);
  if (!a.out.empty()) WriteFile(a.out, json.dump(2) + "\n");
  if (ctx.json) {
    ctx.out << json.dump(2) << '\n';
  } else {
    ctx.out << ToString(metric) << ": baseline " << Percent(report.rate_a)
            << "%, system " << Percent(report.rate_b) << "%, mean delta "
            << Percent(report.mean_delta) << " points, p = " << report.p_value
            << (report.significant ? " (significant" : " (not significant")
            << " at alpha " << report.alpha << ", " << report.replicates
            << " replicates)\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Corpus augmentation and evaluation toolkit for low-resource ASR",
               "glossaug"};
  app.require_subcommand(1, 1);
  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "Key/value config file");
  flags.seed_option =
      app.add_option("--seed", flags.seed, "Seed for every random draw");
  flags.threads_option =
      app.add_option("--threads", flags.threads, "Worker threads")
          ->check(CLI::PositiveNumber);
  app.add_flag("--json", flags.json, "Machine-readable JSON on stdout");

  StatsArgs stats;
  SplitArgs split;
  LexiconArgs lexicon;
  AugmentArgs augment;
  PromptArgs prompt;
  IngestArgs ingest;
  ManifestArgs manifest;
  MixArgs mix;
  EvaluateArgs evaluate;
  SignificanceArgs significance;

  auto sub = [&app](const char* name, const char* description) {
    CLI::App* s = app.add_subcommand(name, description);
    s->fallthrough();
    return s;
  };
  CLI::App* stats_cmd = sub("stats", "Corpus statistics row");
  CLI::App* split_cmd = sub("split", "Deterministic train/val/test split");
  CLI::App* lexicon_cmd = sub("lexicon", "Gloss-to-words lexicon of a training split");
  CLI::App* augment_cmd = sub("augment", "Gloss-based or random replacement");
  CLI::App* prompt_cmd = sub("prompt", "Build (and optionally send) the LLM prompt");
  CLI::App* ingest_cmd = sub("ingest-llm", "Validate raw LLM output");
  CLI::App* manifest_cmd = sub("manifest", "TTS synthesis manifest with five voices");
  CLI::App* mix_cmd = sub("mix", "Combine original and synthetic training data");
  CLI::App* evaluate_cmd = sub("evaluate", "WER / CER / PER");
  CLI::App* significance_cmd = sub("significance", "Paired bootstrap test");
  AddStats(*stats_cmd, stats);
  AddSplit(*split_cmd, split);
  AddLexicon(*lexicon_cmd, lexicon);
  AddAugment(*augment_cmd, augment);
  AddPrompt(*prompt_cmd, prompt);
  AddIngest(*ingest_cmd, ingest);
  AddManifest(*manifest_cmd, manifest);
  AddMix(*mix_cmd, mix);
  AddEvaluate(*evaluate_cmd, evaluate);
  AddSignificance(*significance_cmd, significance);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == 0;
    (help ? out : err) << (help ? "" : std::string("error: ") + e.what() + "\n")
                       << app.help();
    return help ? kExitOk : kExitUsage;
  }

  try {
    Context ctx{flags.config_path.empty() ? ToolkitConfig{}
                                          : LoadConfig(flags.config_path),
                flags.json, out, err};
    ApplyEnvironment(ctx.config);
    if (*flags.seed_option) {
      ctx.config.seed = flags.seed;
      ctx.config.split.seed = flags.seed;
    }
    if (*flags.threads_option) ctx.config.threads = flags.threads;
    ctx.config.Validate();

    if (stats_cmd->parsed()) return RunStats(stats, ctx);
    if (split_cmd->parsed()) return RunSplit(split, ctx);
    if (lexicon_cmd->parsed()) return RunLexicon(lexicon, ctx);
    if (augment_cmd->parsed()) return RunAugment(augment, ctx);
    if (prompt_cmd->parsed()) return RunPrompt(prompt, ctx);
    if (ingest_cmd->parsed()) return RunIngest(ingest, ctx);
    if (manifest_cmd->parsed()) return RunManifest(manifest, ctx);
    if (mix_cmd->parsed()) return RunMix(mix, ctx);
    if (evaluate_cmd->parsed()) return RunEvaluate(evaluate, ctx);
    if (significance_cmd->parsed()) return RunSignificance(significance, ctx);
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << " is required (flag or config [paths])\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

int Main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace glossaug::cli
