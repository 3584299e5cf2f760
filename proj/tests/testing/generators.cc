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

#include "testing/generators.h"

#include <algorithm>
#include <set>

#include "nnerlin/encodings.h"
#include "nnerlin/tree_core.h"

namespace nnerlin::testing {
namespace {

std::string TypeName(int index) { return std::string(1, 'A' + index); }

int Uniform(std::mt19937 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(std::mt19937 &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

void Fill(std::mt19937 &rng, const SentenceOptions &options, int start, int end,
          int level, std::vector<EntitySpan> *out) {
  int pos = start;
  while (pos < end) {
    if (level > options.max_depth || !Chance(rng, options.entity_rate)) {
      ++pos;
      continue;
    }
    int length = 1 + std::geometric_distribution<int>(0.35)(rng);
    length = std::min(length, end - pos);
    int type = Uniform(rng, 0, options.num_types - 1);
    out->push_back({pos, pos + length, TypeName(type)});
    if (options.num_types > 1 && Chance(rng, options.stack_rate)) {
      int other = (type + Uniform(rng, 1, options.num_types - 1)) %
                  options.num_types;
      out->push_back({pos, pos + length, TypeName(other)});
    }
    if (length > 1 || Chance(rng, 0.3)) {
      Fill(rng, options, pos, pos + length, level + 1, out);
    }
    pos += length;
  }
}

Node RandomNode(std::mt19937 &rng, int lo, int hi) {
  auto label = [&] { return TypeName(Uniform(rng, 0, 9)); };
  auto wrap = [&](Node node) {
    int chain = Chance(rng, 0.25) ? Uniform(rng, 1, 2) : 0;
    for (int i = 0; i < chain; ++i) {
      node = Node::Nonterminal(label(), {std::move(node)});
    }
    return node;
  };
  if (hi - lo == 1) return wrap(Node::Leaf(lo, "w" + std::to_string(lo)));
  int k = Uniform(rng, 2, std::min(hi - lo, 6));
  // k - 1 distinct cut points in (lo, hi).
  std::vector<int> cuts;
  for (int c = lo + 1; c < hi; ++c) cuts.push_back(c);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  Node node = Node::Nonterminal(label(), {});
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] == 1 && Chance(rng, 0.5)) {
      node.children.push_back(
          Node::Leaf(cuts[i], "w" + std::to_string(cuts[i])));
    } else {
      node.children.push_back(RandomNode(rng, cuts[i], cuts[i + 1]));
    }
  }
  return wrap(std::move(node));
}

}  // namespace

std::vector<std::string> Tokens(int count) {
  std::vector<std::string> tokens;
  for (int i = 0; i < count; ++i) tokens.push_back("w" + std::to_string(i));
  return tokens;
}

Sentence RandomSentence(std::mt19937 &rng, const SentenceOptions &options) {
  Sentence sentence;
  sentence.tokens = Tokens(Uniform(rng, 1, options.max_length));
  std::vector<EntitySpan> entities;
  Fill(rng, options, 0, sentence.size(), 0, &entities);
  // Drop repeated triples, keeping the first occurrence.
  std::set<std::tuple<int, int, std::string>> seen;
  for (EntitySpan &e : entities) {
    if (seen.insert({e.start, e.end, e.type}).second) {
      sentence.entities.push_back(std::move(e));
    }
  }
  std::shuffle(sentence.entities.begin(), sentence.entities.end(), rng);
  return sentence;
}

std::vector<Sentence> RandomCorpus(std::mt19937 &rng, int count,
                                   const SentenceOptions &options) {
  std::vector<Sentence> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) corpus.push_back(RandomSentence(rng, options));
  return corpus;
}

Sentence RandomMessySentence(std::mt19937 &rng, int max_length) {
  Sentence sentence;
  sentence.tokens = Tokens(Uniform(rng, 1, max_length));
  int n = sentence.size();
  int count = Uniform(rng, 0, 6);
  for (int i = 0; i < count; ++i) {
    int start = Uniform(rng, 0, n);
    int end = Uniform(rng, 0, n);
    sentence.entities.push_back({start, end, TypeName(Uniform(rng, 0, 2))});
    if (Chance(rng, 0.1)) sentence.entities.push_back(sentence.entities.back());
  }
  return sentence;
}

ConstTree RandomTree(std::mt19937 &rng, int num_tokens) {
  Node root = Node::Nonterminal(std::string(kRootLabel), {});
  if (num_tokens == 1) {
    Node leaf = Node::Leaf(0, "w0");
    if (Chance(rng, 0.5)) leaf = Node::Nonterminal("A", {std::move(leaf)});
    root.children.push_back(std::move(leaf));
    return ConstTree{std::move(root)};
  }
  Node body = RandomNode(rng, 0, num_tokens);
  if (Chance(rng, 0.2)) {
    root.children.push_back(std::move(body));
  } else {
    // Splice the generated node's children directly under the root.
    while (body.children.size() == 1 && !body.children[0].is_leaf()) {
      Node inner = std::move(body.children[0]);
      body = std::move(inner);
    }
    root.children = std::move(body.children);
  }
  return ConstTree{std::move(root)};
}

LabelVocabulary ObservedVocabulary(const std::vector<Sentence> &corpus,
                                   Scheme scheme) {
  std::set<std::string> count_seen;
  std::set<std::string> nonterminals;
  std::set<std::string> unaries;
  LabelVocabulary vocab;
  for (const Sentence &s : corpus) {
    for (const TagLabel &label : Encode(SpansToTree(s), scheme)) {
      if (count_seen.insert(FormatCount(label, scheme)).second) {
        TagLabel carrier = label;
        carrier.nonterminal.clear();
        carrier.unary.clear();
        vocab.counts.push_back(carrier);
      }
      nonterminals.insert(label.nonterminal);
      unaries.insert(label.unary);
    }
  }
  vocab.nonterminals.assign(nonterminals.begin(), nonterminals.end());
  vocab.unaries.assign(unaries.begin(), unaries.end());
  return vocab;
}

std::vector<TagLabel> RandomLabels(std::mt19937 &rng,
                                   const LabelVocabulary &vocab, int length) {
  auto pick = [&](const auto &items) {
    return items[Uniform(rng, 0, static_cast<int>(items.size()) - 1)];
  };
  std::vector<TagLabel> labels;
  for (int i = 0; i < length; ++i) {
    TagLabel label = pick(vocab.counts);
    label.nonterminal = pick(vocab.nonterminals);
    label.unary = pick(vocab.unaries);
    labels.push_back(std::move(label));
  }
  return labels;
}

Sentence Perturb(std::mt19937 &rng, const Sentence &gold) {
  Sentence pred;
  pred.tokens = gold.tokens;
  int n = gold.size();
  for (const EntitySpan &e : gold.entities) {
    if (Chance(rng, 0.2)) continue;
    EntitySpan p = e;
    if (Chance(rng, 0.15)) p.type = TypeName(Uniform(rng, 0, 9));
    if (Chance(rng, 0.15)) {
      p.start = std::clamp(p.start + Uniform(rng, -1, 1), 0, n - 1);
      p.end = std::clamp(p.end + Uniform(rng, -1, 1), p.start + 1, n);
    }
    pred.entities.push_back(std::move(p));
  }
  if (Chance(rng, 0.3)) {
    int start = Uniform(rng, 0, n - 1);
    int end = Uniform(rng, start + 1, n);
    pred.entities.push_back({start, end, TypeName(Uniform(rng, 0, 9))});
  }
  SortCanonical(&pred.entities);
  return pred;
}

}  // namespace nnerlin::testing
