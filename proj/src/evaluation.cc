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

#include "nnerlin/evaluation.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace nnerlin {
namespace {

using Triple = std::tuple<int, int, std::string>;

Triple Key(const EntitySpan &e) { return {e.start, e.end, e.type}; }

void CheckAligned(const std::vector<Sentence> &gold,
                  const std::vector<Sentence> &pred) {
  size_t common = std::min(gold.size(), pred.size());
  for (size_t i = 0; i < common; ++i) {
    if (gold[i].tokens != pred[i].tokens) {
      throw AlignmentError(static_cast<int>(i), "token sequences differ");
    }
  }
  if (gold.size() != pred.size()) {
    throw AlignmentError(static_cast<int>(common),
                         "gold has " + std::to_string(gold.size()) +
                             " sentences, prediction has " +
                             std::to_string(pred.size()));
  }
}

// Bucket membership of one entity given its depth.
using BucketPredicate = std::function<bool(const EntitySpan &, int depth)>;

struct Bucket {
  std::string key;
  BucketPredicate contains;
};

std::vector<Bucket> DepthBuckets() {
  return {
      {"0", [](const EntitySpan &, int d) { return d == 0; }},
      {"1", [](const EntitySpan &, int d) { return d == 1; }},
      {">=1", [](const EntitySpan &, int d) { return d >= 1; }},
      {">=2", [](const EntitySpan &, int d) { return d >= 2; }},
  };
}

std::vector<Bucket> LengthBuckets() {
  return {
      {"1", [](const EntitySpan &e, int) { return e.length() == 1; }},
      {"2-4",
       [](const EntitySpan &e, int) {
         return e.length() >= 2 && e.length() <= 4;
       }},
      {">=2", [](const EntitySpan &e, int) { return e.length() >= 2; }},
      {"5-9",
       [](const EntitySpan &e, int) {
         return e.length() >= 5 && e.length() <= 9;
       }},
      {">=10", [](const EntitySpan &e, int) { return e.length() >= 10; }},
  };
}

std::vector<Bucket> TypeBuckets(const std::vector<Sentence> &gold,
                                const std::vector<Sentence> &pred) {
  std::set<std::string> types;
  for (const auto *corpus : {&gold, &pred}) {
    for (const Sentence &s : *corpus) {
      for (const EntitySpan &e : s.entities) types.insert(e.type);
    }
  }
  std::vector<Bucket> buckets;
  for (const std::string &type : types) {
    buckets.push_back(
        {type, [type](const EntitySpan &e, int) { return e.type == type; }});
  }
  return buckets;
}

// Adds one side of one sentence to |counts|: |is_gold| selects the side.
void CountSide(const Sentence &side, const std::set<Triple> &other,
               const std::vector<int> &depths, const BucketPredicate &in_bucket,
               bool is_gold, ScoreCounts *counts) {
  for (size_t i = 0; i < side.entities.size(); ++i) {
    const EntitySpan &e = side.entities[i];
    if (in_bucket && !in_bucket(e, depths[i])) continue;
    bool correct = other.count(Key(e)) > 0;
    if (is_gold) {
      ++counts->gold;
      counts->correct_gold += correct;
    } else {
      ++counts->predicted;
      counts->correct_predicted += correct;
    }
  }
}

std::string Percent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%6.2f", 100.0 * value);
  return buffer;
}

nlohmann::ordered_json ScoreJson(const Score &score) {
  nlohmann::ordered_json out;
  out["precision"] = score.precision;
  out["recall"] = score.recall;
  out["f1"] = score.f1;
  out["gold"] = score.counts.gold;
  out["predicted"] = score.counts.predicted;
  out["correct_gold"] = score.counts.correct_gold;
  out["correct_predicted"] = score.counts.correct_predicted;
  return out;
}

}  // namespace

ScoreCounts &ScoreCounts::operator+=(const ScoreCounts &other) {
  gold += other.gold;
  predicted += other.predicted;
  correct_gold += other.correct_gold;
  correct_predicted += other.correct_predicted;
  return *this;
}

Score Score::FromCounts(const ScoreCounts &counts) {
  Score score;
  score.counts = counts;
  if (counts.predicted > 0) {
    score.precision = static_cast<double>(counts.correct_predicted) /
                      static_cast<double>(counts.predicted);
  }
  if (counts.gold > 0) {
    score.recall = static_cast<double>(counts.correct_gold) /
                   static_cast<double>(counts.gold);
  }
  if (score.precision + score.recall > 0) {
    score.f1 = 2 * score.precision * score.recall /
               (score.precision + score.recall);
  }
  return score;
}

std::string_view AxisName(Axis axis) {
  switch (axis) {
    case Axis::kDepth:
      return "depth";
    case Axis::kLength:
      return "length";
    case Axis::kType:
      return "type";
  }
  return "?";
}

const Score *EvalReport::Find(std::string_view key) const {
  for (const auto &[name, score] : buckets) {
    if (name == key) return &score;
  }
  return nullptr;
}

int EntityDepth(const EntitySpan &entity, const Sentence &sentence) {
  int depth = 0;
  for (const EntitySpan &other : sentence.entities) {
    if (other.Contains(entity) && !other.SameBoundaries(entity)) ++depth;
  }
  return depth;
}

std::vector<int> EntityDepths(const Sentence &sentence) {
  std::vector<int> depths;
  depths.reserve(sentence.entities.size());
  for (const EntitySpan &e : sentence.entities) {
    depths.push_back(EntityDepth(e, sentence));
  }
  return depths;
}

EvalReport StrictScore(const std::vector<Sentence> &gold,
                       const std::vector<Sentence> &pred) {
  CheckAligned(gold, pred);
  ScoreCounts counts;
  std::vector<int> unused;
  for (size_t i = 0; i < gold.size(); ++i) {
    std::set<Triple> gold_set, pred_set;
    for (const EntitySpan &e : gold[i].entities) gold_set.insert(Key(e));
    for (const EntitySpan &e : pred[i].entities) pred_set.insert(Key(e));
    CountSide(gold[i], pred_set, unused, nullptr, true, &counts);
    CountSide(pred[i], gold_set, unused, nullptr, false, &counts);
  }
  EvalReport report;
  report.overall = Score::FromCounts(counts);
  return report;
}

EvalReport BucketedScore(const std::vector<Sentence> &gold,
                         const std::vector<Sentence> &pred, Axis axis) {
  EvalReport report = StrictScore(gold, pred);
  std::vector<Bucket> buckets;
  switch (axis) {
    case Axis::kDepth:
      buckets = DepthBuckets();
      break;
    case Axis::kLength:
      buckets = LengthBuckets();
      break;
    case Axis::kType:
      buckets = TypeBuckets(gold, pred);
      break;
  }
  std::vector<ScoreCounts> counts(buckets.size());
  for (size_t i = 0; i < gold.size(); ++i) {
    std::set<Triple> gold_set, pred_set;
    for (const EntitySpan &e : gold[i].entities) gold_set.insert(Key(e));
    for (const EntitySpan &e : pred[i].entities) pred_set.insert(Key(e));
    std::vector<int> gold_depths = EntityDepths(gold[i]);
    std::vector<int> pred_depths = EntityDepths(pred[i]);
    for (size_t b = 0; b < buckets.size(); ++b) {
      CountSide(gold[i], pred_set, gold_depths, buckets[b].contains, true,
                &counts[b]);
      CountSide(pred[i], gold_set, pred_depths, buckets[b].contains, false,
                &counts[b]);
    }
  }
  for (size_t b = 0; b < buckets.size(); ++b) {
    report.buckets.emplace_back(buckets[b].key, Score::FromCounts(counts[b]));
  }
  if (axis == Axis::kType && !report.buckets.empty()) {
    double sum = 0;
    for (const auto &[type, score] : report.buckets) sum += score.f1;
    double mean = sum / static_cast<double>(report.buckets.size());
    double squares = 0;
    for (const auto &[type, score] : report.buckets) {
      squares += (score.f1 - mean) * (score.f1 - mean);
    }
    report.has_type_statistics = true;
    report.mean_f1 = mean;
    report.stddev_f1 =
        std::sqrt(squares / static_cast<double>(report.buckets.size()));
  }
  return report;
}

std::string FormatReport(const EvalReport &report, std::string_view title) {
  std::ostringstream out;
  auto row = [&](std::string_view name, const Score &score) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), "%-12.*s %s %s %s %8ld %8ld\n",
                  static_cast<int>(name.size()), name.data(),
                  Percent(score.precision).c_str(),
                  Percent(score.recall).c_str(), Percent(score.f1).c_str(),
                  score.counts.gold, score.counts.predicted);
    out << buffer;
  };
  out << title << '\n';
  out << "bucket            P      R     F1     gold     pred\n";
  row("overall", report.overall);
  for (const auto &[key, score] : report.buckets) row(key, score);
  if (report.has_type_statistics) {
    out << "mean F1 " << Percent(report.mean_f1) << " +- "
        << Percent(report.stddev_f1) << '\n';
  }
  return out.str();
}

std::string ReportToJson(const EvalReport &report) {
  nlohmann::ordered_json out;
  out["overall"] = ScoreJson(report.overall);
  out["counts"] = {{"gold", report.overall.counts.gold},
                   {"predicted", report.overall.counts.predicted},
                   {"matched", report.overall.counts.correct_gold}};
  out["buckets"] = nlohmann::ordered_json::object();
  for (const auto &[key, score] : report.buckets) {
    out["buckets"][key] = ScoreJson(score);
  }
  if (report.has_type_statistics) {
    out["mean_f1"] = report.mean_f1;
    out["stddev_f1"] = report.stddev_f1;
  }
  return out.dump();
}

}  // namespace nnerlin
