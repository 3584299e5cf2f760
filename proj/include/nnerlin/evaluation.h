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

#ifndef NNERLIN_EVALUATION_H_
#define NNERLIN_EVALUATION_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nnerlin/sentence.h"

namespace nnerlin {

class AlignmentError : public std::runtime_error {
 public:
  AlignmentError(int index, const std::string &message)
      : std::runtime_error("sentence " + std::to_string(index) + ": " +
                           message),
        index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// Entity counts behind a precision/recall pair. Recall uses the gold-side
// counts and precision the predicted side. They differ only inside depth
// buckets, where each side is bucketed by its own nesting structure.
struct ScoreCounts {
  long gold = 0;
  long predicted = 0;
  long correct_gold = 0;
  long correct_predicted = 0;

  ScoreCounts &operator+=(const ScoreCounts &other);
  bool operator==(const ScoreCounts &) const = default;
};

struct Score {
  ScoreCounts counts;
  double precision = 0;
  double recall = 0;
  double f1 = 0;

  // P = 0 without predictions, R = 0 without gold, F1 = 0 when P + R = 0.
  static Score FromCounts(const ScoreCounts &counts);
};

enum class Axis { kDepth, kLength, kType };

std::string_view AxisName(Axis axis);

struct EvalReport {
  Score overall;
  // Bucket key -> score, in display order.
  std::vector<std::pair<std::string, Score>> buckets;
  // Type axis only: population mean and standard deviation of per-type F1.
  bool has_type_statistics = false;
  double mean_f1 = 0;
  double stddev_f1 = 0;

  const Score *Find(std::string_view key) const;
};

// Micro-averaged strict matching on (start, end, type). Throws
// AlignmentError if the corpora differ in sentence count or tokens.
EvalReport StrictScore(const std::vector<Sentence> &gold,
                       const std::vector<Sentence> &pred);

// Number of other entities whose span strictly contains |entity|. Entities
// with identical boundaries do not contain each other.
int EntityDepth(const EntitySpan &entity, const Sentence &sentence);
std::vector<int> EntityDepths(const Sentence &sentence);

// Depth buckets: 0, 1, >=1, >=2. Length buckets: 1, 2-4, >=2, 5-9, >=10.
// Type buckets: one per type seen on either side, plus mean/stddev of F1.
EvalReport BucketedScore(const std::vector<Sentence> &gold,
                         const std::vector<Sentence> &pred, Axis axis);

std::string FormatReport(const EvalReport &report, std::string_view title);
// {"overall": {...}, "counts": {...}, "buckets": {...}}
std::string ReportToJson(const EvalReport &report);

}  // namespace nnerlin

#endif  // NNERLIN_EVALUATION_H_
