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

#include "nnerlin/coverage.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nnerlin/encodings.h"
#include "nnerlin/evaluation.h"
#include "nnerlin/tree_core.h"

namespace nnerlin {
namespace {

using Components = std::array<std::string, 3>;

Components Split(const TagLabel &label, Scheme scheme) {
  return {FormatCount(label, scheme), FormatSlot(label.nonterminal),
          FormatSlot(label.unary)};
}

std::optional<Scheme> CommonScheme(
    std::initializer_list<const std::vector<LabeledSentence> *> corpora) {
  std::optional<Scheme> scheme;
  for (const auto *corpus : corpora) {
    for (const LabeledSentence &s : *corpus) {
      if (scheme && *scheme != s.scheme) {
        throw SchemeMismatchError(
            "tag files use different schemes: " +
            std::string(SchemeName(*scheme)) + " and " +
            std::string(SchemeName(s.scheme)));
      }
      scheme = s.scheme;
    }
  }
  return scheme;
}

std::string Triple(const std::array<long, 3> &values) {
  return "(" + std::to_string(values[0]) + "," + std::to_string(values[1]) +
         "," + std::to_string(values[2]) + ")";
}

std::string LengthBucket(int length) {
  if (length <= 1) return "1";
  if (length <= 4) return "2-4";
  if (length <= 9) return "5-9";
  return ">=10";
}

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

CoverageStats VocabCoverage(const std::vector<LabeledSentence> &train,
                            const std::vector<LabeledSentence> &eval) {
  CommonScheme({&train, &eval});
  std::array<std::set<std::string>, 3> train_vocab, eval_vocab;
  std::set<Components> train_triples;
  for (const LabeledSentence &s : train) {
    for (const TagLabel &label : s.labels) {
      Components parts = Split(label, s.scheme);
      for (int k = 0; k < 3; ++k) train_vocab[k].insert(parts[k]);
      train_triples.insert(std::move(parts));
    }
  }
  CoverageStats stats;
  for (const LabeledSentence &s : eval) {
    for (const TagLabel &label : s.labels) {
      Components parts = Split(label, s.scheme);
      for (int k = 0; k < 3; ++k) eval_vocab[k].insert(parts[k]);
      ++stats.eval_tokens;
      stats.covered_tokens += train_triples.count(parts) > 0;
    }
  }
  for (int k = 0; k < 3; ++k) {
    stats.unique_train[k] = static_cast<long>(train_vocab[k].size());
    stats.unique_eval[k] = static_cast<long>(eval_vocab[k].size());
    for (const std::string &value : eval_vocab[k]) {
      stats.missing_eval[k] += train_vocab[k].count(value) == 0;
    }
  }
  if (stats.eval_tokens > 0) {
    stats.instance_coverage = static_cast<double>(stats.covered_tokens) /
                              static_cast<double>(stats.eval_tokens);
  }
  return stats;
}

CoverageRow MakeCoverageRow(
    std::string dataset, const std::vector<LabeledSentence> &train,
    const std::vector<std::pair<std::string, std::vector<LabeledSentence>>>
        &splits) {
  CoverageRow row;
  row.dataset = std::move(dataset);
  std::vector<LabeledSentence> all_eval;
  for (const auto &[name, sentences] : splits) {
    CoverageStats stats = VocabCoverage(train, sentences);
    row.covered.emplace_back(name, stats.instance_coverage);
    all_eval.insert(all_eval.end(), sentences.begin(), sentences.end());
  }
  CoverageStats combined = VocabCoverage(train, all_eval);
  row.labels = combined.unique_train;
  row.missing = combined.missing_eval;
  if (auto scheme = CommonScheme({&train, &all_eval})) row.scheme = *scheme;
  return row;
}

std::string FormatCoveragePercent(double fraction) {
  std::string text = Fixed(100.0 * fraction, 2);
  if (fraction < 1.0 && text == "100.00") return ">99.99";
  return text;
}

std::string FormatCoverageTable(const std::vector<CoverageRow> &rows) {
  std::ostringstream out;
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), "%-12s %-5s %-18s %-18s", "Dataset",
                "Enc.", "# Labels (n,c,u)", "Missing (n,c,u)");
  out << buffer;
  if (!rows.empty()) {
    for (const auto &[name, value] : rows.front().covered) {
      std::snprintf(buffer, sizeof(buffer), " %8s", ("% " + name).c_str());
      out << buffer;
    }
  }
  out << '\n';
  for (const CoverageRow &row : rows) {
    std::snprintf(buffer, sizeof(buffer), "%-12s %-5s %-18s %-18s",
                  row.dataset.c_str(), std::string(SchemeName(row.scheme)).c_str(),
                  Triple(row.labels).c_str(), Triple(row.missing).c_str());
    out << buffer;
    for (const auto &[name, value] : row.covered) {
      std::snprintf(buffer, sizeof(buffer), " %8s",
                    FormatCoveragePercent(value).c_str());
      out << buffer;
    }
    out << '\n';
  }
  return out.str();
}

CorpusProfile ProfileCorpus(const std::vector<Sentence> &sentences,
                            std::optional<Scheme> scheme) {
  CorpusProfile profile;
  profile.sentences = static_cast<long>(sentences.size());
  profile.length_histogram = {{"1", 0}, {"2-4", 0}, {"5-9", 0}, {">=10", 0}};
  if (sentences.empty()) {
    if (scheme == Scheme::kDynamic) profile.dynamic.emplace();
    return profile;
  }

  double total_length = 0;
  for (const Sentence &s : sentences) total_length += s.size();
  profile.mean_length = total_length / static_cast<double>(sentences.size());
  double squares = 0;
  for (const Sentence &s : sentences) {
    squares += (s.size() - profile.mean_length) * (s.size() - profile.mean_length);
  }
  profile.stddev_length =
      std::sqrt(squares / static_cast<double>(sentences.size()));

  std::set<std::string> types;
  std::vector<int> depths;
  for (const Sentence &s : sentences) {
    std::vector<int> sentence_depths = EntityDepths(s);
    depths.insert(depths.end(), sentence_depths.begin(), sentence_depths.end());
    for (const EntitySpan &e : s.entities) {
      types.insert(e.type);
      std::string bucket = LengthBucket(e.length());
      for (auto &[key, count] : profile.length_histogram) {
        if (key == bucket) ++count;
      }
    }
  }
  profile.entities = static_cast<long>(depths.size());
  profile.types = static_cast<long>(types.size());
  if (!depths.empty()) {
    std::sort(depths.begin(), depths.end());
    profile.max_depth = depths.back();
    profile.depth_histogram.assign(profile.max_depth + 1, 0);
    double sum = 0;
    for (int d : depths) {
      ++profile.depth_histogram[d];
      sum += d;
    }
    profile.mean_depth = sum / static_cast<double>(depths.size());
    size_t mid = depths.size() / 2;
    profile.median_depth = depths.size() % 2 == 1
                               ? depths[mid]
                               : (depths[mid - 1] + depths[mid]) / 2.0;
  }

  if (scheme == Scheme::kDynamic) {
    CorpusProfile::DynamicUsage usage;
    for (const Sentence &s : sentences) {
      std::vector<TagLabel> labels = Encode(SpansToTree(s), Scheme::kDynamic);
      long absolute = std::count_if(labels.begin(), labels.end(),
                                    [](const TagLabel &l) { return l.absolute; });
      usage.labels += static_cast<long>(labels.size());
      usage.absolute_labels += absolute;
      usage.affected_sentences += absolute > 0;
    }
    if (usage.labels > 0) {
      usage.absolute_fraction = static_cast<double>(usage.absolute_labels) /
                                static_cast<double>(usage.labels);
    }
    usage.sentence_fraction = static_cast<double>(usage.affected_sentences) /
                              static_cast<double>(sentences.size());
    profile.dynamic = usage;
  }
  return profile;
}

std::string FormatProfile(const CorpusProfile &p) {
  std::ostringstream out;
  out << "sentences        " << p.sentences << '\n';
  out << "sentence length  " << Fixed(p.mean_length, 2) << " +- "
      << Fixed(p.stddev_length, 2) << '\n';
  out << "entities         " << p.entities << '\n';
  out << "entity types     " << p.types << '\n';
  out << "entity depth     mean " << Fixed(p.mean_depth, 2) << ", median "
      << Fixed(p.median_depth, 1) << ", max " << p.max_depth << '\n';
  out << "depth histogram ";
  for (size_t d = 0; d < p.depth_histogram.size(); ++d) {
    out << ' ' << d << ':' << p.depth_histogram[d];
  }
  out << '\n';
  out << "length histogram";
  for (const auto &[key, count] : p.length_histogram) {
    out << ' ' << key << ':' << count;
  }
  out << '\n';
  if (p.dynamic) {
    out << "dyn abs labels   " << p.dynamic->absolute_labels << " / "
        << p.dynamic->labels << " (" << Fixed(100 * p.dynamic->absolute_fraction, 2)
        << "%)\n";
    out << "dyn sentences    " << p.dynamic->affected_sentences << " / "
        << p.sentences << " (" << Fixed(100 * p.dynamic->sentence_fraction, 2)
        << "%)\n";
  }
  return out.str();
}

std::string ProfileToJson(const CorpusProfile &p) {
  nlohmann::ordered_json out;
  out["sentences"] = p.sentences;
  out["mean_length"] = p.mean_length;
  out["stddev_length"] = p.stddev_length;
  out["entities"] = p.entities;
  out["types"] = p.types;
  out["mean_depth"] = p.mean_depth;
  out["median_depth"] = p.median_depth;
  out["max_depth"] = p.max_depth;
  out["depth_histogram"] = p.depth_histogram;
  out["length_histogram"] = nlohmann::ordered_json::object();
  for (const auto &[key, count] : p.length_histogram) {
    out["length_histogram"][key] = count;
  }
  if (p.dynamic) {
    out["dyn"] = {{"labels", p.dynamic->labels},
                  {"absolute_labels", p.dynamic->absolute_labels},
                  {"affected_sentences", p.dynamic->affected_sentences},
                  {"absolute_fraction", p.dynamic->absolute_fraction},
                  {"sentence_fraction", p.dynamic->sentence_fraction}};
  }
  return out.dump();
}

std::string CoverageToJson(const CoverageRow &row) {
  nlohmann::ordered_json out;
  out["dataset"] = row.dataset;
  out["scheme"] = SchemeName(row.scheme);
  out["labels"] = row.labels;
  out["missing"] = row.missing;
  out["covered"] = nlohmann::ordered_json::object();
  for (const auto &[name, value] : row.covered) out["covered"][name] = value;
  return out.dump();
}

}  // namespace nnerlin
