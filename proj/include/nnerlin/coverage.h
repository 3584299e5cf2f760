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

#ifndef NNERLIN_COVERAGE_H_
#define NNERLIN_COVERAGE_H_

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nnerlin/corpus_io.h"
#include "nnerlin/sentence.h"
#include "nnerlin/tag_label.h"

namespace nnerlin {

// Label vocabulary statistics of an evaluation set against a training set.
// Component triples are ordered (n, c, u). Component values are the tag-file
// lexemes, so the empty slot "-" is a vocabulary item too.
struct CoverageStats {
  std::array<long, 3> unique_train = {0, 0, 0};
  std::array<long, 3> unique_eval = {0, 0, 0};
  std::array<long, 3> missing_eval = {0, 0, 0};
  long eval_tokens = 0;
  long covered_tokens = 0;
  // covered_tokens / eval_tokens; 1 for an empty evaluation set.
  double instance_coverage = 1.0;
};

class SchemeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws SchemeMismatchError if the sentences do not share one scheme.
CoverageStats VocabCoverage(const std::vector<LabeledSentence> &train,
                            const std::vector<LabeledSentence> &eval);

// One line of the coverage table: training vocabulary, labels missing from
// the union of the evaluation splits, and per-split instance coverage.
struct CoverageRow {
  std::string dataset;
  Scheme scheme = Scheme::kAbsolute;
  std::array<long, 3> labels = {0, 0, 0};
  std::array<long, 3> missing = {0, 0, 0};
  std::vector<std::pair<std::string, double>> covered;
};

CoverageRow MakeCoverageRow(
    std::string dataset, const std::vector<LabeledSentence> &train,
    const std::vector<std::pair<std::string, std::vector<LabeledSentence>>>
        &splits);

// Columns: Dataset, Enc., # Labels (n,c,u), Missing (n,c,u), % <split>...
std::string FormatCoverageTable(const std::vector<CoverageRow> &rows);
// "100.00", "99.96", or ">99.99" when rounding would hide a miss.
std::string FormatCoveragePercent(double fraction);

struct CorpusProfile {
  long sentences = 0;
  double mean_length = 0;
  double stddev_length = 0;
  long entities = 0;
  long types = 0;
  double mean_depth = 0;
  double median_depth = 0;
  int max_depth = 0;
  // Entity count per nesting depth 0..max_depth.
  std::vector<long> depth_histogram;
  // Entity count per length bucket "1", "2-4", "5-9", ">=10".
  std::vector<std::pair<std::string, long>> length_histogram;

  // Dynamic-encoding usage, present when profiled with Scheme::kDynamic.
  struct DynamicUsage {
    long labels = 0;
    long absolute_labels = 0;
    long affected_sentences = 0;
    double absolute_fraction = 0;
    double sentence_fraction = 0;
  };
  std::optional<DynamicUsage> dynamic;
};

CorpusProfile ProfileCorpus(const std::vector<Sentence> &sentences,
                            std::optional<Scheme> scheme = std::nullopt);

std::string FormatProfile(const CorpusProfile &profile);
std::string ProfileToJson(const CorpusProfile &profile);
std::string CoverageToJson(const CoverageRow &row);

}  // namespace nnerlin

#endif  // NNERLIN_COVERAGE_H_
