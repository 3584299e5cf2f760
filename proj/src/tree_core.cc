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

#include <algorithm>
#include <numeric>
#include <utility>

namespace nnerlin {
namespace {

// Entity nesting used while building the tree. Index -1 is the root.
struct Nest {
  const EntitySpan *span = nullptr;
  std::vector<int> kids;
};

Node BuildNode(const std::vector<std::string> &tokens,
               const std::vector<Nest> &nests, const std::string &label,
               int start, int end, const std::vector<int> &kids) {
  Node node = Node::Nonterminal(label, {});
  size_t next_kid = 0;
  int pos = start;
  while (pos < end) {
    if (next_kid < kids.size() && nests[kids[next_kid]].span->start == pos) {
      const Nest &kid = nests[kids[next_kid++]];
      node.children.push_back(BuildNode(tokens, nests, kid.span->type,
                                        kid.span->start, kid.span->end,
                                        kid.kids));
      pos = kid.span->end;
    } else {
      node.children.push_back(Node::Leaf(pos, tokens[pos]));
      ++pos;
    }
  }
  return node;
}

// Returns the [first, last) token range covered by |node|.
std::pair<int, int> CollectSpans(const Node &node, bool is_root,
                                 std::vector<EntitySpan> *spans) {
  if (node.is_leaf()) return {node.token, node.token + 1};
  int first = -1;
  int last = -1;
  for (const Node &child : node.children) {
    auto [child_first, child_last] = CollectSpans(child, false, spans);
    if (first < 0) first = child_first;
    last = child_last;
  }
  if (first < 0) return {0, 0};
  if (is_root && node.label == kRootLabel) return {first, last};
  if (IsPrimed(node.label)) return {first, last};
  size_t pos = 0;
  std::string_view label = node.label;
  while (pos <= label.size()) {
    size_t next = label.find(kUnaryJoin, pos);
    if (next == std::string_view::npos) next = label.size();
    std::string_view part = label.substr(pos, next - pos);
    if (!part.empty() && !IsReservedLabel(part) && !IsPrimed(part)) {
      spans->push_back(EntitySpan{first, last, std::string(part)});
    }
    pos = next + 1;
  }
  return {first, last};
}

Node Collapse(Node node, bool is_root) {
  if (node.is_leaf()) return node;
  for (Node &child : node.children) child = Collapse(std::move(child), false);
  if (!is_root && node.children.size() == 1 && !node.children[0].is_leaf()) {
    Node child = std::move(node.children[0]);
    node.label += kUnaryJoin;
    node.label += child.label;
    node.children = std::move(child.children);
  }
  return node;
}

std::vector<std::string> SplitChain(std::string_view label) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= label.size()) {
    size_t next = label.find(kUnaryJoin, pos);
    if (next == std::string_view::npos) next = label.size();
    if (next > pos) parts.emplace_back(label.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

Node Expand(Node node) {
  if (node.is_leaf()) return node;
  for (Node &child : node.children) child = Expand(std::move(child));
  if (node.label.find(kUnaryJoin) == std::string::npos) return node;
  std::vector<std::string> parts = SplitChain(node.label);
  if (parts.empty()) {
    node.label.clear();
    return node;
  }
  Node inner = Node::Nonterminal(parts.back(), std::move(node.children));
  for (int i = static_cast<int>(parts.size()) - 2; i >= 0; --i) {
    inner = Node::Nonterminal(parts[i], {std::move(inner)});
  }
  return inner;
}

Node BinarizeNode(Node node) {
  if (node.is_leaf()) return node;
  for (Node &child : node.children) child = BinarizeNode(std::move(child));
  size_t k = node.children.size();
  if (k <= 2) return node;
  std::string primed = node.label + kPrimeMarker;
  Node tail = Node::Nonterminal(
      primed, {std::move(node.children[k - 2]), std::move(node.children[k - 1])});
  for (size_t j = k - 2; j-- > 1;) {
    tail = Node::Nonterminal(primed,
                             {std::move(node.children[j]), std::move(tail)});
  }
  return Node::Nonterminal(node.label,
                           {std::move(node.children[0]), std::move(tail)});
}

Node DebinarizeNode(Node node) {
  if (node.is_leaf()) return node;
  std::vector<Node> children;
  for (size_t i = 0; i < node.children.size(); ++i) {
    Node child = DebinarizeNode(std::move(node.children[i]));
    if (!child.is_leaf() && IsPrimed(child.label)) {
      if (i + 1 != node.children.size()) {
        throw StructureError("prime-marked node '" + child.label +
                             "' is not a right child");
      }
      for (Node &grandchild : child.children) {
        children.push_back(std::move(grandchild));
      }
    } else {
      children.push_back(std::move(child));
    }
  }
  node.children = std::move(children);
  return node;
}

void CollectPaths(const Node &node, std::vector<const Node *> *path,
                  std::vector<std::vector<const Node *>> *paths) {
  if (node.is_leaf()) {
    paths->push_back(*path);
    return;
  }
  path->push_back(&node);
  for (const Node &child : node.children) CollectPaths(child, path, paths);
  path->pop_back();
}

// Ancestor chain (root first) of every leaf.
std::vector<std::vector<const Node *>> LeafPaths(const Node &root) {
  std::vector<std::vector<const Node *>> paths;
  std::vector<const Node *> path;
  CollectPaths(root, &path, &paths);
  return paths;
}

}  // namespace

ConstTree SpansToTree(const Sentence &sentence) {
  const auto &entities = sentence.entities;
  std::vector<int> order(entities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const EntitySpan &x = entities[a];
    const EntitySpan &y = entities[b];
    if (x.start != y.start) return x.start < y.start;
    return x.end > y.end;
  });

  std::vector<Nest> nests(entities.size());
  std::vector<int> top_level;
  std::vector<int> stack;
  for (int index : order) {
    const EntitySpan &span = entities[index];
    if (span.start < 0 || span.end > sentence.size() ||
        span.start >= span.end) {
      throw std::logic_error("span out of bounds: " + ToString(span));
    }
    nests[index].span = &span;
    while (!stack.empty() && entities[stack.back()].end <= span.start) {
      stack.pop_back();
    }
    if (!stack.empty() && !entities[stack.back()].Contains(span)) {
      throw std::logic_error("crossing spans: " +
                             ToString(entities[stack.back()]) + " and " +
                             ToString(span));
    }
    (stack.empty() ? top_level : nests[stack.back()].kids).push_back(index);
    stack.push_back(index);
  }
  return ConstTree{BuildNode(sentence.tokens, nests, std::string(kRootLabel),
                             0, sentence.size(), top_level)};
}

std::vector<EntitySpan> TreeToSpans(const ConstTree &tree) {
  std::vector<EntitySpan> spans;
  CollectSpans(tree.root, true, &spans);
  SortCanonical(&spans);
  return spans;
}

ConstTree CollapseUnaries(const ConstTree &tree) {
  return ConstTree{Collapse(tree.root, true)};
}

ConstTree ExpandUnaries(const ConstTree &tree) {
  return ConstTree{Expand(tree.root)};
}

BinaryTree Binarize(const ConstTree &tree) {
  return BinaryTree{BinarizeNode(tree.root)};
}

ConstTree Debinarize(const BinaryTree &tree) {
  if (!tree.root.is_leaf() && IsPrimed(tree.root.label)) {
    throw StructureError("prime-marked root '" + tree.root.label + "'");
  }
  return ConstTree{DebinarizeNode(tree.root)};
}

std::vector<Fencepost> FencepostDepths(const ConstTree &tree) {
  ConstTree collapsed = CollapseUnaries(tree);
  auto paths = LeafPaths(collapsed.root);
  std::vector<Fencepost> fenceposts;
  fenceposts.reserve(paths.size());
  for (size_t i = 0; i + 1 < paths.size(); ++i) {
    const auto &left = paths[i];
    const auto &right = paths[i + 1];
    size_t common = 0;
    while (common < left.size() && common < right.size() &&
           left[common] == right[common]) {
      ++common;
    }
    fenceposts.push_back(
        Fencepost{static_cast<int>(common), left[common - 1]->label});
  }
  if (!paths.empty()) fenceposts.push_back(Fencepost{1, collapsed.root.label});
  return fenceposts;
}

std::vector<std::string> LeafUnaries(const ConstTree &collapsed) {
  std::vector<std::string> unaries;
  for (const auto &path : LeafPaths(collapsed.root)) {
    if (path.size() >= 2 && path.back()->is_preterminal()) {
      unaries.push_back(path.back()->label);
    } else {
      unaries.emplace_back();
    }
  }
  return unaries;
}

}  // namespace nnerlin
