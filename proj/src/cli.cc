// Copyright 2026 The nner-lin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nnerlin/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nnerlin/coverage.h"
#include "nnerlin/encodings.h"
#include "nnerlin/parallel.h"
#include "nnerlin/tree_core.h"

namespace nnerlin {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decode failure tagged with its sentence index.
struct SentenceDecodeError {
  size_t sentence;
  DecodeError error;
};

// Opens |path|, or hands out the injected stream for "-".
class InputFile {
 public:
  InputFile(const std::string &path, std::istream &standard) {
    if (path == "-") {
      stream_ = &standard;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open input '" + path + "'");
    stream_ = file_.get();
  }
  std::istream &stream() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream *stream_ = nullptr;
};

void WriteOutput(const std::string &path, const std::string &text,
                 std::ostream &standard) {
  if (path == "-") {
    standard << text;
    standard.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output '" + path + "'");
  file << text;
  if (!file) throw IoError("failed writing '" + path + "'");
}

int Threads(const CliConfig &config) {
  return config.threads > 0 ? config.threads : ThreadsFromEnvironment();
}

std::vector<Sentence> ReadCorpus(const std::string &path,
                                 const CliConfig &config,
                                 const Streams &streams, const char *what) {
  InputFile input(path, streams.in);
  ParseStats stats;
  std::vector<Sentence> sentences =
      ParseCorpus(input.stream(), config.crossing, &stats);
  if (input.stream().bad()) throw IoError("failed reading '" + path + "'");
  for (const std::string &warning : stats.warnings) {
    streams.err << what << ": warning: " << warning << '\n';
  }
  streams.err << what << ": " << path << ": " << stats.sentences
              << " sentences, " << stats.entities << " entities, "
              << stats.spans_dropped << " spans dropped, "
              << stats.duplicates_removed << " duplicates removed\n";
  return sentences;
}

std::vector<LabeledSentence> ReadTagFile(const std::string &path,
                                         const Streams &streams) {
  InputFile input(path, streams.in);
  std::vector<LabeledSentence> sentences = ParseLabeled(input.stream());
  if (input.stream().bad()) throw IoError("failed reading '" + path + "'");
  return sentences;
}

Scheme RequireScheme(const CliConfig &config) {
  if (!config.scheme) {
    throw std::invalid_argument(config.subcommand + " requires --scheme");
  }
  return *config.scheme;
}

const std::string &SingleInput(const CliConfig &config) {
  if (config.inputs.size() != 1) {
    throw std::invalid_argument(config.subcommand +
                                " takes exactly one --input");
  }
  return config.inputs.front();
}

LabeledSentence EncodeSentence(const Sentence &sentence, Scheme scheme) {
  return LabeledSentence{sentence.tokens,
                         Encode(SpansToTree(sentence), scheme), scheme};
}

// Decodes every sentence; a strict-mode failure is reported with the index
// of the first failing sentence.
std::vector<Sentence> DecodeAll(const std::vector<LabeledSentence> &tagged,
                                DecodeMode mode, int threads) {
  return ParallelMap<Sentence>(tagged.size(), threads, [&](size_t i) {
    const LabeledSentence &s = tagged[i];
    try {
      ConstTree tree = Decode(s.labels, s.tokens, s.scheme, mode);
      return Sentence{s.tokens, TreeToSpans(tree)};
    } catch (const DecodeError &e) {
      throw SentenceDecodeError{i, e};
    }
  });
}

std::string SplitName(const std::string &path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

// Maps library errors onto exit codes.
template <typename Fn>
int Guarded(const Streams &streams, const std::string &command, Fn fn) {
  try {
    return fn();
  } catch (const IoError &e) {
    streams.err << command << ": error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SentenceDecodeError &e) {
    streams.err << command << ": error: sentence " << e.sentence << ": "
                << e.error.what() << '\n';
    return kExitStrictDecode;
  } catch (const std::exception &e) {
    streams.err << command << ": error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace

int RunEncode(const CliConfig &config, const Streams &streams) {
  return Guarded(streams, "encode", [&] {
    Scheme scheme = RequireScheme(config);
    std::vector<Sentence> sentences =
        ReadCorpus(SingleInput(config), config, streams, "encode");
    auto tagged = ParallelMap<LabeledSentence>(
        sentences.size(), Threads(config),
        [&](size_t i) { return EncodeSentence(sentences[i], scheme); });
    WriteOutput(config.output, WriteLabeled(tagged, config.combined),
                streams.out);
    return static_cast<int>(kExitOk);
  });
}

int RunDecode(const CliConfig &config, const Streams &streams) {
  return Guarded(streams, "decode", [&] {
    Scheme scheme = RequireScheme(config);
    std::vector<LabeledSentence> tagged =
        ReadTagFile(SingleInput(config), streams);
    for (const LabeledSentence &s : tagged) {
      if (s.scheme != scheme) {
        throw SchemeMismatchError("tag file declares scheme " +
                                  std::string(SchemeName(s.scheme)) +
                                  ", expected " +
                                  std::string(SchemeName(scheme)));
      }
    }
    DecodeMode mode = config.strict ? DecodeMode::kStrict : DecodeMode::kRepair;
    std::vector<Sentence> sentences = DecodeAll(tagged, mode, Threads(config));
    long entities = 0;
    for (const Sentence &s : sentences) entities += s.entities.size();
    streams.err << "decode: " << sentences.size() << " sentences, " << entities
                << " entities\n";
    WriteOutput(config.output, WriteCorpus(sentences), streams.out);
    return static_cast<int>(kExitOk);
  });
}

int RunEval(const CliConfig &config, const Streams &streams) {
  return Guarded(streams, "eval", [&] {
    if (config.gold.empty() || config.pred.empty()) {
      throw std::invalid_argument("eval requires --gold and --pred");
    }
    std::vector<Sentence> gold = ReadCorpus(config.gold, config, streams, "eval");
    std::vector<Sentence> pred = ReadCorpus(config.pred, config, streams, "eval");
    std::vector<Axis> axes;
    if (config.by) {
      axes = {*config.by};
    } else {
      axes = {Axis::kDepth, Axis::kLength, Axis::kType};
    }
    std::vector<EvalReport> reports;
    for (Axis axis : axes) reports.push_back(BucketedScore(gold, pred, axis));

    std::string text;
    if (config.json) {
      if (reports.size() == 1) {
        text = ReportToJson(reports.front()) + "\n";
      } else {
        auto out = nlohmann::ordered_json::parse(ReportToJson(reports.front()));
        out["buckets"] = nlohmann::ordered_json::object();
        for (size_t i = 0; i < axes.size(); ++i) {
          auto axis_json = nlohmann::ordered_json::parse(ReportToJson(reports[i]));
          nlohmann::ordered_json buckets = axis_json["buckets"];
          if (axis_json.contains("mean_f1")) {
            buckets["mean_f1"] = axis_json["mean_f1"];
            buckets["stddev_f1"] = axis_json["stddev_f1"];
          }
          out["buckets"][std::string(AxisName(axes[i]))] = buckets;
        }
        text = out.dump() + "\n";
      }
    } else {
      for (size_t i = 0; i < axes.size(); ++i) {
        if (i > 0) text += "\n";
        text += FormatReport(reports[i],
                             "by " + std::string(AxisName(axes[i])));
      }
    }
    WriteOutput(config.output, text, streams.out);
    return static_cast<int>(kExitOk);
  });
}

int RunStats(const CliConfig &config, const Streams &streams) {
  return Guarded(streams, "stats", [&] {
    std::string text;
    if (!config.train.empty()) {
      std::vector<LabeledSentence> train = ReadTagFile(config.train, streams);
      std::vector<std::pair<std::string, std::vector<LabeledSentence>>> splits;
      for (const std::string &path : config.inputs) {
        splits.emplace_back(SplitName(path), ReadTagFile(path, streams));
      }
      CoverageRow row = MakeCoverageRow(SplitName(config.train), train, splits);
      if (config.scheme && !train.empty() && row.scheme != *config.scheme) {
        throw SchemeMismatchError("tag files use scheme " +
                                  std::string(SchemeName(row.scheme)));
      }
      text = config.json ? CoverageToJson(row) + "\n"
                         : FormatCoverageTable({row});
    } else {
      std::vector<Sentence> sentences =
          ReadCorpus(SingleInput(config), config, streams, "stats");
      CorpusProfile profile = ProfileCorpus(sentences, config.scheme);
      text = config.json ? ProfileToJson(profile) + "\n" : FormatProfile(profile);
    }
    WriteOutput(config.output, text, streams.out);
    return static_cast<int>(kExitOk);
  });
}

int RunRoundtrip(const CliConfig &config, const Streams &streams) {
  return Guarded(streams, "roundtrip", [&] {
    Scheme scheme = RequireScheme(config);
    std::vector<Sentence> sentences =
        ReadCorpus(SingleInput(config), config, streams, "roundtrip");
    DecodeMode mode = config.strict ? DecodeMode::kStrict : DecodeMode::kRepair;
    // Goes through the tag-file text so serialization is covered as well.
    auto preserved = ParallelMap<char>(
        sentences.size(), Threads(config), [&](size_t i) -> char {
          const Sentence &s = sentences[i];
          std::string text =
              WriteLabeled({EncodeSentence(s, scheme)}, config.combined);
          std::vector<LabeledSentence> tagged = ParseLabeled(text);
          try {
            ConstTree tree =
                Decode(tagged.front().labels, tagged.front().tokens, scheme,
                       mode);
            return TreeToSpans(tree) == Canonicalize(s).entities;
          } catch (const DecodeError &) {
            return false;
          }
        });
    for (size_t i = 0; i < sentences.size(); ++i) {
      if (preserved[i]) continue;
      streams.err << "roundtrip: sentence " << i
                  << " not preserved under scheme " << SchemeName(scheme)
                  << '\n';
      WriteOutput(config.output, WriteRecord(sentences[i]) + "\n", streams.out);
      return static_cast<int>(kExitRoundtripMismatch);
    }
    WriteOutput(config.output,
                "roundtrip " + std::string(SchemeName(scheme)) + ": " +
                    std::to_string(sentences.size()) +
                    " sentences preserved\n",
                streams.out);
    return static_cast<int>(kExitOk);
  });
}

int RunCli(int argc, const char *const *argv, const Streams &streams) {
  CLI::App app{
      "Nested NER as sequence labeling: encode span corpora into per-token "
      "tags, decode tags back to spans, score and profile.\n"
      "Exit codes: 0 ok, 1 parse/validation/usage error, 2 I/O error, "
      "3 strict decode failure, 4 roundtrip mismatch.",
      "nner-lin"};
  app.require_subcommand(1);

  CliConfig config;
  std::string scheme_name;
  std::string crossing = "error";
  std::string by;
  std::string input = "-";
  std::vector<std::string> stats_inputs;

  const std::vector<std::string> schemes = {"abs", "rel", "dyn", "4tg"};
  auto add_scheme = [&](CLI::App *cmd) {
    cmd->add_option("--scheme", scheme_name, "abs, rel, dyn or 4tg")
        ->check(CLI::IsMember(schemes));
  };
  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--output", config.output, "output path or - for stdout");
    cmd->add_flag("--json", config.json, "emit JSON");
    cmd->add_option("--crossing", crossing,
                    "crossing/inverted spans: error or drop")
        ->check(CLI::IsMember({"error", "drop"}));
  };

  CLI::App *encode = app.add_subcommand("encode", "span corpus -> tag file");
  add_scheme(encode);
  add_common(encode);
  encode->add_option("--input", input, "corpus path or -");
  encode->add_flag("--combined", config.combined, "one n|c|u label column");

  CLI::App *decode = app.add_subcommand("decode", "tag file -> span corpus");
  add_scheme(decode);
  add_common(decode);
  decode->add_option("--input", input, "tag file path or -");
  decode->add_flag("--strict", config.strict,
                   "fail on ill-formed labels instead of repairing");

  CLI::App *eval = app.add_subcommand("eval", "strict and bucketed scores");
  add_common(eval);
  eval->add_option("--gold", config.gold, "gold corpus")->required();
  eval->add_option("--pred", config.pred, "predicted corpus")->required();
  eval->add_option("--by", by, "depth, length or type")
      ->check(CLI::IsMember({"depth", "length", "type"}));

  CLI::App *stats = app.add_subcommand(
      "stats", "corpus profile, or label coverage with --train");
  add_scheme(stats);
  add_common(stats);
  stats->add_option("--input", stats_inputs,
                    "corpus (profile) or evaluation tag files (coverage)");
  stats->add_option("--train", config.train, "training tag file");

  CLI::App *roundtrip = app.add_subcommand(
      "roundtrip", "encode and decode every sentence, compare span sets");
  add_scheme(roundtrip);
  add_common(roundtrip);
  roundtrip->add_option("--input", input, "corpus path or -");
  roundtrip->add_flag("--combined", config.combined, "use combined columns");
  roundtrip->add_flag("--strict", config.strict, "decode in strict mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, streams.out, streams.err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (!scheme_name.empty()) config.scheme = SchemeFromName(scheme_name);
  config.crossing =
      crossing == "drop" ? CrossingPolicy::kDropOffender : CrossingPolicy::kError;
  if (by == "depth") config.by = Axis::kDepth;
  if (by == "length") config.by = Axis::kLength;
  if (by == "type") config.by = Axis::kType;

  if (encode->parsed()) {
    config.subcommand = "encode";
    config.inputs = {input};
    return RunEncode(config, streams);
  }
  if (decode->parsed()) {
    config.subcommand = "decode";
    config.inputs = {input};
    return RunDecode(config, streams);
  }
  if (eval->parsed()) {
    config.subcommand = "eval";
    return RunEval(config, streams);
  }
  if (stats->parsed()) {
    config.subcommand = "stats";
    config.inputs = stats_inputs;
    if (config.inputs.empty()) config.inputs = {"-"};
    return RunStats(config, streams);
  }
  config.subcommand = "roundtrip";
  config.inputs = {input};
  return RunRoundtrip(config, streams);
}

}  // namespace nnerlin
