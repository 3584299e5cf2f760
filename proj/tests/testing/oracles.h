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

#ifndef NNERLIN_TESTS_TESTING_ORACLES_H_
#define NNERLIN_TESTS_TESTING_ORACLES_H_

// Reference computations that share no code path with the library. Each one
// is the slow, obvious version of something the library does efficiently.

#include <array>
#include <string>
#include <vector>

#include "nnerlin/corpus_io.h"
#include "nnerlin/sentence.h"
#include "nnerlin/tree.h"

namespace nnerlin::testing {

struct OracleFencepost {
  int depth = 0;
  std::string label;
};

// Ancestor-set intersection on the uncollapsed tree. A non-root node whose
// only child is a non-terminal belongs to a unary chain and is not counted
// separately; the LCA label is its whole chain joined with '+'.
std::vector<OracleFencepost> BruteForceFenceposts(const ConstTree &tree);

// Nested loops over gold x pred triples.
struct OracleCounts {
  long gold = 0;
  long predicted = 0;
  long correct_gold = 0;
  long correct_predicted = 0;
};

enum class OracleBucket {
  kAll,
  kDepth0,
  kDepth1,
  kDepthAtLeast1,
  kDepthAtLeast2,
  kLength1,
  kLength2To4,
  kLengthAtLeast2,
  kLength5To9,
  kLengthAtLeast10,
};

OracleCounts BruteForceScore(const std::vector<Sentence> &gold,
                             const std::vector<Sentence> &pred,
                             OracleBucket bucket = OracleBucket::kAll);
OracleCounts BruteForceTypeScore(const std::vector<Sentence> &gold,
                                 const std::vector<Sentence> &pred,
                                 const std::string &type);

// Containment count with explicit boundary comparisons.
int BruteForceDepth(const Sentence &sentence, size_t index);

// Linear scans over vectors of lexeme strings.
struct OracleCoverage {
  std::array<long, 3> unique_train = {0, 0, 0};
  std::array<long, 3> missing = {0, 0, 0};
  long covered = 0;
  long total = 0;
};
OracleCoverage BruteForceCoverage(const std::vector<LabeledSentence> &train,
                                  const std::vector<LabeledSentence> &eval);

// Keeps an entity iff it is well formed and crosses / duplicates no earlier
// kept entity.
std::vector<EntitySpan> DropCrossingOracle(const std::vector<EntitySpan> &input,
                                           int num_tokens);

// Sentence invariant checker for the fuzz suites: in-bounds, non-empty,
// no duplicates, no crossing pairs.
bool SatisfiesSentenceInvariant(const Sentence &sentence, std::string *why);

}  // namespace nnerlin::testing

#endif  // NNERLIN_TESTS_TESTING_ORACLES_H_
