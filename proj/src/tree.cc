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

#include "nnerlin/tree.h"

#include <algorithm>

#include "nnerlin/sentence.h"

namespace nnerlin {
namespace {

void CollectLeaves(const Node &node, std::vector<const Node *> *leaves) {
  if (node.is_leaf()) {
    leaves->push_back(&node);
    return;
  }
  for (const Node &child : node.children) CollectLeaves(child, leaves);
}

bool CheckNode(const Node &node, int *next_token) {
  if (node.is_leaf()) return node.token == (*next_token)++;
  if (node.children.empty()) return false;
  for (const Node &child : node.children) {
    if (!CheckNode(child, next_token)) return false;
  }
  return true;
}

}  // namespace

std::vector<const Node *> Leaves(const Node &root) {
  std::vector<const Node *> leaves;
  CollectLeaves(root, &leaves);
  return leaves;
}

int CountNodes(const Node &root) {
  int count = 1;
  for (const Node &child : root.children) count += CountNodes(child);
  return count;
}

int Height(const Node &root) {
  int height = 0;
  for (const Node &child : root.children) {
    height = std::max(height, Height(child));
  }
  return height + 1;
}

bool IsPrimed(std::string_view label) {
  return !label.empty() && label.back() == kPrimeMarker;
}

bool IsReservedLabel(std::string_view label) { return label == kRootLabel; }

bool IsWellFormed(const Node &root, int num_tokens) {
  if (root.is_leaf()) return false;
  int next = 0;
  return CheckNode(root, &next) && next == num_tokens;
}

}  // namespace nnerlin
