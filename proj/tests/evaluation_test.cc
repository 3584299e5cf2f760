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
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "testing/generators.h"
#include "testing/oracles.h"

namespace nnerlin {
namespace {

Sentence Make(std::vector<EntitySpan> entities, int n = 6) {
  Sentence s;
  s.tokens = testing::Tokens(n);
  s.entities = std::move(entities);
  return s;
}

ScoreCounts ToCounts(const testing::OracleCounts &c) {
  return {c.gold, c.predicted, c.correct_gold, c.correct_predicted};
}

// F1 as the exact ratio 2*cp*cg / (cp*g + cg*p).
double RationalF1(const ScoreCounts &c) {
  long numerator = 2 * c.correct_predicted * c.correct_gold;
  long denominator = c.correct_predicted * c.gold + c.correct_gold * c.predicted;
  return denominator == 0 ? 0.0 : static_cast<double>(numerator) / denominator;
}

TEST(StrictScoreTest, WorkedExample) {
  auto gold = Make({{0, 1, "PER"}, {2, 6, "PER"}, {4, 6, "GPE"}});
  auto pred = Make({{0, 1, "PER"}, {4, 6, "GPE"}, {2, 6, "ORG"}});
  Score score = StrictScore({gold}, {pred}).overall;
  EXPECT_EQ(score.counts, (ScoreCounts{3, 3, 2, 2}));
  EXPECT_DOUBLE_EQ(score.precision, 2.0 / 3);
  EXPECT_DOUBLE_EQ(score.recall, 2.0 / 3);
  EXPECT_DOUBLE_EQ(score.f1, 2.0 / 3);
}

TEST(StrictScoreTest, EmptyIsZero) {
  Score score = StrictScore({Make({})}, {Make({})}).overall;
  EXPECT_EQ(score.precision, 0);
  EXPECT_EQ(score.recall, 0);
  EXPECT_EQ(score.f1, 0);
}

TEST(StrictScoreTest, Identity) {
  std::mt19937 rng(31);
  auto corpus = testing::RandomCorpus(rng, 200);
  Score score = StrictScore(corpus, corpus).overall;
  EXPECT_EQ(score.f1, 1.0);
}

TEST(StrictScoreTest, Alignment) {
  EXPECT_THROW(StrictScore({Make({})}, {}), AlignmentError);
  try {
    StrictScore({Make({}), Make({})}, {Make({}), Make({}, 3)});
    FAIL();
  } catch (const AlignmentError &e) {
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(StrictScoreTest, SwapSymmetry) {
  std::mt19937 rng(37);
  for (int i = 0; i < 200; ++i) {
    Sentence gold = testing::RandomSentence(rng);
    SortCanonical(&gold.entities);
    Sentence pred = testing::Perturb(rng, gold);
    Score forward = StrictScore({gold}, {pred}).overall;
    Score backward = StrictScore({pred}, {gold}).overall;
    EXPECT_EQ(forward.precision, backward.recall);
    EXPECT_EQ(forward.recall, backward.precision);
    EXPECT_EQ(forward.f1, backward.f1);
  }
}

TEST(DepthTest, Examples) {
  auto s = Make({{0, 1, "PER"}, {2, 6, "PER"}, {4, 6, "GPE"}, {4, 5, "X"}});
  EXPECT_EQ(EntityDepths(s), (std::vector<int>{0, 0, 1, 2}));
  // Identical boundaries do not contain each other.
  auto stacked = Make({{0, 2, "A"}, {0, 2, "B"}});
  EXPECT_EQ(EntityDepths(stacked), (std::vector<int>{0, 0}));
}

TEST(DepthTest, MatchesBruteForce) {
  std::mt19937 rng(41);
  for (int i = 0; i < 2000; ++i) {
    Sentence s = testing::RandomSentence(rng);
    auto depths = EntityDepths(s);
    for (size_t k = 0; k < s.entities.size(); ++k) {
      ASSERT_EQ(depths[k], testing::BruteForceDepth(s, k));
      ASSERT_EQ(EntityDepth(s.entities[k], s), depths[k]);
    }
  }
}

TEST(BucketTest, PartitionsSumToOverall) {
  std::mt19937 rng(43);
  std::vector<Sentence> gold, pred;
  for (int i = 0; i < 300; ++i) {
    gold.push_back(testing::RandomSentence(rng));
    SortCanonical(&gold.back().entities);
    pred.push_back(testing::Perturb(rng, gold.back()));
  }
  EvalReport depth = BucketedScore(gold, pred, Axis::kDepth);
  ScoreCounts sum = depth.Find("0")->counts;
  sum += depth.Find(">=1")->counts;
  EXPECT_EQ(sum, depth.overall.counts);
  EvalReport length = BucketedScore(gold, pred, Axis::kLength);
  sum = length.Find("1")->counts;
  sum += length.Find("2-4")->counts;
  sum += length.Find("5-9")->counts;
  sum += length.Find(">=10")->counts;
  EXPECT_EQ(sum, length.overall.counts);
  EvalReport type = BucketedScore(gold, pred, Axis::kType);
  sum = {};
  for (const auto &[key, score] : type.buckets) sum += score.counts;
  EXPECT_EQ(sum, type.overall.counts);
}

TEST(BucketTest, MatchesBruteForce) {
  using testing::OracleBucket;
  const std::vector<std::pair<std::string, OracleBucket>> depth_keys = {
      {"0", OracleBucket::kDepth0},
      {"1", OracleBucket::kDepth1},
      {">=1", OracleBucket::kDepthAtLeast1},
      {">=2", OracleBucket::kDepthAtLeast2}};
  const std::vector<std::pair<std::string, OracleBucket>> length_keys = {
      {"1", OracleBucket::kLength1},
      {"2-4", OracleBucket::kLength2To4},
      {">=2", OracleBucket::kLengthAtLeast2},
      {"5-9", OracleBucket::kLength5To9},
      {">=10", OracleBucket::kLengthAtLeast10}};
  std::mt19937 rng(47);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Sentence> gold, pred;
    int size = 1 + i % 4;
    for (int k = 0; k < size; ++k) {
      gold.push_back(testing::RandomSentence(rng));
      SortCanonical(&gold.back().entities);
      pred.push_back(testing::Perturb(rng, gold.back()));
    }
    Score overall = StrictScore(gold, pred).overall;
    ScoreCounts expected = ToCounts(testing::BruteForceScore(gold, pred));
    ASSERT_EQ(overall.counts, expected);
    ASSERT_DOUBLE_EQ(overall.f1, RationalF1(expected));
    for (const auto &[axis, keys] :
         {std::pair{Axis::kDepth, depth_keys},
          std::pair{Axis::kLength, length_keys}}) {
      EvalReport report = BucketedScore(gold, pred, axis);
      for (const auto &[key, bucket] : keys) {
        ScoreCounts want = ToCounts(testing::BruteForceScore(gold, pred, bucket));
        ASSERT_NE(report.Find(key), nullptr) << key;
        ASSERT_EQ(report.Find(key)->counts, want) << key;
        ASSERT_DOUBLE_EQ(report.Find(key)->f1, RationalF1(want)) << key;
      }
    }
    EvalReport types = BucketedScore(gold, pred, Axis::kType);
    for (const auto &[key, score] : types.buckets) {
      ASSERT_EQ(score.counts,
                ToCounts(testing::BruteForceTypeScore(gold, pred, key)));
    }
  }
}

TEST(BucketTest, TypeStatistics) {
  auto gold = Make({{0, 1, "PER"}, {2, 6, "PER"}});
  auto pred = Make({{0, 1, "PER"}});
  EvalReport single = BucketedScore({gold}, {pred}, Axis::kType);
  ASSERT_TRUE(single.has_type_statistics);
  EXPECT_DOUBLE_EQ(single.mean_f1, 2.0 / 3);
  EXPECT_EQ(single.stddev_f1, 0.0);

  auto gold2 = Make({{0, 1, "PER"}, {2, 3, "LOC"}});
  auto pred2 = Make({{0, 1, "PER"}});
  EvalReport two = BucketedScore({gold2}, {pred2}, Axis::kType);
  EXPECT_DOUBLE_EQ(two.mean_f1, 0.5);
  EXPECT_DOUBLE_EQ(two.stddev_f1, 0.5);
}

TEST(ReportTest, Renders) {
  auto gold = Make({{0, 1, "PER"}});
  EvalReport report = BucketedScore({gold}, {gold}, Axis::kDepth);
  std::string text = FormatReport(report, "depth");
  EXPECT_NE(text.find("overall"), std::string::npos);
  EXPECT_NE(text.find(">=2"), std::string::npos);
  std::string json = ReportToJson(report);
  EXPECT_NE(json.find("\"buckets\""), std::string::npos);
}

}  // namespace
}  // namespace nnerlin
