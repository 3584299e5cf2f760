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

#include "nnerlin/tree_core.h"

#include <random>

#include <gtest/gtest.h>

#include "nnerlin/corpus_io.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace nnerlin {
namespace {

Sentence Lincoln() {
  Sentence s;
  s.tokens = {"Lincoln", "was", "president", "of", "the", "USA"};
  s.entities = {{0, 1, "PER"}, {2, 6, "PER"}, {4, 6, "GPE"}};
  return s;
}

bool HasPrimedLeftChild(const Node &node) {
  for (size_t i = 0; i < node.children.size(); ++i) {
    const Node &child = node.children[i];
    if (child.is_leaf()) continue;
    if (IsPrimed(child.label) && i + 1 != node.children.size()) return true;
    if (HasPrimedLeftChild(child)) return true;
  }
  return false;
}

bool IsBinary(const Node &node) {
  if (node.is_leaf()) return true;
  if (node.children.size() > 2) return false;
  for (const Node &child : node.children) {
    if (!IsBinary(child)) return false;
  }
  return true;
}

TEST(SpansToTreeTest, Lincoln) {
  EXPECT_EQ(WriteTree(SpansToTree(Lincoln())),
            "(S (PER Lincoln) was (PER president of (GPE the USA)))");
}

TEST(SpansToTreeTest, FlatRoot) {
  Sentence s;
  s.tokens = {"a", "b"};
  EXPECT_EQ(WriteTree(SpansToTree(s)), "(S a b)");
}

TEST(SpansToTreeTest, StackedSpansKeepInputOrder) {
  Sentence s;
  s.tokens = {"x", "y"};
  s.entities = {{0, 2, "A"}, {0, 2, "B"}};
  EXPECT_EQ(WriteTree(SpansToTree(s)), "(S (A (B x y)))");
  EXPECT_EQ(WriteTree(CollapseUnaries(SpansToTree(s))), "(S (A+B x y))");
}

TEST(TreeToSpansTest, SplitsChains) {
  auto spans = TreeToSpans(ParseTree("(S (A+B x y))"));
  std::vector<EntitySpan> expected = {{0, 2, "A"}, {0, 2, "B"}};
  SortCanonical(&expected);
  EXPECT_EQ(spans, expected);
}

TEST(TreeToSpansTest, SkipsPrimes) {
  auto spans = TreeToSpans(ParseTree("(S (A x (A' y z)))"));
  std::vector<EntitySpan> expected = {{0, 3, "A"}};
  EXPECT_EQ(spans, expected);
}

TEST(TreeToSpansTest, RandomSentencesRoundTrip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 5000; ++i) {
    Sentence s = testing::RandomSentence(rng);
    std::vector<EntitySpan> expected = s.entities;
    SortCanonical(&expected);
    ASSERT_EQ(TreeToSpans(SpansToTree(s)), expected);
  }
}

TEST(CollapseTest, RootNeverCollapses) {
  ConstTree tree = ParseTree("(S (A (B x y)))");
  EXPECT_EQ(WriteTree(CollapseUnaries(tree)), "(S (A+B x y))");
  EXPECT_EQ(WriteTree(ExpandUnaries(CollapseUnaries(tree))), WriteTree(tree));
}

TEST(CollapseTest, Preterminal) {
  ConstTree tree = ParseTree("(S (A (B x)) y)");
  EXPECT_EQ(WriteTree(CollapseUnaries(tree)), "(S (A+B x) y)");
}

TEST(CollapseTest, RandomTrees) {
  std::mt19937 rng(13);
  for (int i = 0; i < 10000; ++i) {
    ConstTree tree = testing::RandomTree(rng, 1 + i % 30);
    ConstTree collapsed = CollapseUnaries(tree);
    ASSERT_EQ(ExpandUnaries(collapsed), tree) << WriteTree(tree);
    EXPECT_EQ(CollapseUnaries(collapsed), collapsed);
  }
}

TEST(BinarizeTest, Lincoln) {
  BinaryTree binary = Binarize(CollapseUnaries(SpansToTree(Lincoln())));
  EXPECT_EQ(WriteTree(binary.root),
            "(S (PER Lincoln) (S' was (PER president (PER' of (GPE the USA)))))");
}

TEST(BinarizeTest, RandomTrees) {
  std::mt19937 rng(17);
  for (int i = 0; i < 10000; ++i) {
    ConstTree collapsed = CollapseUnaries(testing::RandomTree(rng, 1 + i % 30));
    BinaryTree binary = Binarize(collapsed);
    ASSERT_TRUE(IsBinary(binary.root)) << WriteTree(binary.root);
    EXPECT_FALSE(HasPrimedLeftChild(binary.root)) << WriteTree(binary.root);
    EXPECT_EQ(Debinarize(binary), collapsed);
  }
}

TEST(BinarizeTest, LeftPrimeRejected) {
  BinaryTree bad{ParseTree("(S (A' x y) z)").root};
  EXPECT_THROW(Debinarize(bad), StructureError);
}

TEST(FencepostTest, Lincoln) {
  std::vector<Fencepost> expected = {{1, "S"}, {1, "S"},   {2, "PER"},
                                     {2, "PER"}, {3, "GPE"}, {1, "S"}};
  EXPECT_EQ(FencepostDepths(SpansToTree(Lincoln())), expected);
}

TEST(FencepostTest, MatchesBruteForce) {
  std::mt19937 rng(19);
  for (int i = 0; i < 10000; ++i) {
    ConstTree tree = testing::RandomTree(rng, 1 + i % 30);
    auto fast = FencepostDepths(tree);
    auto slow = testing::BruteForceFenceposts(tree);
    ASSERT_EQ(fast.size(), slow.size());
    for (size_t k = 0; k < fast.size(); ++k) {
      ASSERT_EQ(fast[k].depth, slow[k].depth) << WriteTree(tree) << " @" << k;
      ASSERT_EQ(fast[k].label, slow[k].label) << WriteTree(tree) << " @" << k;
    }
  }
}

TEST(LeafUnariesTest, Chains) {
  auto unaries = LeafUnaries(CollapseUnaries(ParseTree("(S (A (B x)) y (C z w))")));
  std::vector<std::string> expected = {"A+B", "", "", ""};
  EXPECT_EQ(unaries, expected);
}

}  // namespace
}  // namespace nnerlin
