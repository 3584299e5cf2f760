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

#ifndef NNERLIN_TREE_H_
#define NNERLIN_TREE_H_

#include <string>
#include <string_view>
#include <vector>

namespace nnerlin {

// A constituent tree node. Leaves carry the token text in |label| and their
// sentence position in |token|; non-terminals have token == -1.
struct Node {
  std::string label;
  std::vector<Node> children;
  int token = -1;

  static Node Leaf(int index, std::string text) {
    Node node;
    node.label = std::move(text);
    node.token = index;
    return node;
  }
  static Node Nonterminal(std::string label, std::vector<Node> children) {
    Node node;
    node.label = std::move(label);
    node.children = std::move(children);
    return node;
  }

  bool is_leaf() const { return token >= 0; }
  // A non-terminal whose only child is a leaf.
  bool is_preterminal() const {
    return !is_leaf() && children.size() == 1 && children[0].is_leaf();
  }

  bool operator==(const Node &) const = default;
};

// An n-ary tree over the tokens of one sentence.
struct ConstTree {
  Node root;
  bool operator==(const ConstTree &) const = default;
};

// A binarized tree. Every non-terminal has two children except unary chains
// sitting directly over a leaf (and a root with a single child).
struct BinaryTree {
  Node root;
  bool operator==(const BinaryTree &) const = default;
};

// Leaves in left-to-right order.
std::vector<const Node *> Leaves(const Node &root);
int CountNodes(const Node &root);
int Height(const Node &root);

bool IsPrimed(std::string_view label);
bool IsReservedLabel(std::string_view label);

// Checks that leaves read 0..n-1 and no non-terminal is empty.
bool IsWellFormed(const Node &root, int num_tokens);

}  // namespace nnerlin

#endif  // NNERLIN_TREE_H_
