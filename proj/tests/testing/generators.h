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

#ifndef NNERLIN_TESTS_TESTING_GENERATORS_H_
#define NNERLIN_TESTS_TESTING_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "nnerlin/corpus_io.h"
#include "nnerlin/sentence.h"
#include "nnerlin/tag_label.h"
#include "nnerlin/tree.h"

namespace nnerlin::testing {

struct SentenceOptions {
  int max_length = 40;
  // Maximum entity nesting depth (0 = flat only).
  int max_depth = 6;
  int num_types = 10;
  // Chance that a token position opens an entity.
  double entity_rate = 0.35;
  // Chance of stacking a second entity on identical boundaries.
  double stack_rate = 0.08;
};

// Random well-nested sentence. Entities are listed in shuffled order.
Sentence RandomSentence(std::mt19937 &rng, const SentenceOptions &options = {});
std::vector<Sentence> RandomCorpus(std::mt19937 &rng, int count,
                                   const SentenceOptions &options = {});

// Random entity set that may contain crossing, inverted and duplicate spans.
Sentence RandomMessySentence(std::mt19937 &rng, int max_length = 12);

// Random n-ary tree under root "S" with labels A..J, unary chains and wide
// nodes, over |num_tokens| leaves.
ConstTree RandomTree(std::mt19937 &rng, int num_tokens);

// Label vocabulary observed when encoding |corpus| under |scheme|.
struct LabelVocabulary {
  std::vector<TagLabel> counts;  // n-slot carriers
  std::vector<std::string> nonterminals;
  std::vector<std::string> unaries;
};
LabelVocabulary ObservedVocabulary(const std::vector<Sentence> &corpus,
                                   Scheme scheme);

// Uniformly random labels drawn component-wise from |vocab|.
std::vector<TagLabel> RandomLabels(std::mt19937 &rng,
                                   const LabelVocabulary &vocab, int length);

std::vector<std::string> Tokens(int count);

// Pseudo-prediction: gold with random deletions, type swaps, boundary shifts
// and spurious entities. Spans may cross.
Sentence Perturb(std::mt19937 &rng, const Sentence &gold);

}  // namespace nnerlin::testing

#endif  // NNERLIN_TESTS_TESTING_GENERATORS_H_
