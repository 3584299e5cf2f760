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

#ifndef NNERLIN_TREE_CORE_H_
#define NNERLIN_TREE_CORE_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "nnerlin/sentence.h"
#include "nnerlin/tree.h"

namespace nnerlin {

// Thrown by Debinarize on trees that binarization cannot produce.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds the tree under a synthetic root "S" in which every entity is a
// non-terminal over exactly its tokens. Entities with identical boundaries
// are stacked outer-to-inner in input order. The sentence must be free of
// crossing spans; violations throw std::logic_error.
ConstTree SpansToTree(const Sentence &sentence);

// One entity per non-terminal that is neither the reserved root symbol nor
// prime-marked; "A+B" labels yield one entity per component. Canonical order,
// duplicates removed.
std::vector<EntitySpan> TreeToSpans(const ConstTree &tree);

// Joins maximal chains of single-child non-terminals below the root into one
// node labeled "A+B+...". A chain ending on a leaf becomes a single node
// over that leaf, which the encoders emit as the u-slot.
ConstTree CollapseUnaries(const ConstTree &tree);
// Splits every "+"-joined label back into a chain. Empty components are
// skipped.
ConstTree ExpandUnaries(const ConstTree &tree);

// Right-branching binarization: (X c1 c2 ... ck) with k > 2 becomes
// (X c1 (X' c2 (X' ... (X' ck-1 ck)))).
BinaryTree Binarize(const ConstTree &tree);
// Splices every prime-marked node into its parent. Throws StructureError if
// a prime-marked node is the root or not the last child of its parent.
ConstTree Debinarize(const BinaryTree &tree);

struct Fencepost {
  int depth = 0;
  std::string label;
  bool operator==(const Fencepost &) const = default;
};

// For each token i < n-1, the number of common ancestors of tokens i and i+1
// in the unary-collapsed tree and the label of their lowest common ancestor.
// The last entry is (1, root label).
std::vector<Fencepost> FencepostDepths(const ConstTree &tree);

// u-slot of every token in a collapsed tree: the label of the preterminal
// chain above the leaf (below the root), or "".
std::vector<std::string> LeafUnaries(const ConstTree &collapsed);

}  // namespace nnerlin

#endif  // NNERLIN_TREE_CORE_H_
