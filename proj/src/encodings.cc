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

#include "nnerlin/encodings.h"

#include <algorithm>
#include <utility>

#include "nnerlin/sentence.h"
#include "nnerlin/tree_core.h"

namespace nnerlin {
namespace {

// ---------------------------------------------------------------------------
// Encoding

std::vector<TagLabel> EncodeDepth(const ConstTree &tree, Scheme scheme) {
  std::vector<Fencepost> fenceposts = FencepostDepths(tree);
  std::vector<std::string> unaries = LeafUnaries(CollapseUnaries(tree));
  std::vector<TagLabel> labels;
  labels.reserve(fenceposts.size());
  int previous = 0;
  for (size_t i = 0; i < fenceposts.size(); ++i) {
    int absolute = fenceposts[i].depth;
    int relative = absolute - previous;
    previous = absolute;
    TagLabel label =
        TagLabel::Depth(absolute, fenceposts[i].label, unaries[i]);
    if (scheme == Scheme::kRelative) {
      label.value = relative;
    } else if (scheme == Scheme::kDynamic) {
      if (DynamicUsesAbsolute(relative, absolute)) {
        label.absolute = true;
      } else {
        label.value = relative;
      }
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

struct PathCollector {
  std::vector<const Node *> path;
  std::vector<std::vector<const Node *>> paths;

  void Visit(const Node &node) {
    path.push_back(&node);
    if (node.is_leaf()) {
      paths.push_back(path);
    } else {
      for (const Node &child : node.children) Visit(child);
    }
    path.pop_back();
  }
};

// 'l' or 'L' if |child| is the left child of |parent|. The root and the
// only child of a unary root count as left.
bool IsLeftChild(const Node *parent, const Node *child) {
  if (parent == nullptr || parent->children.size() < 2) return true;
  return &parent->children.front() == child;
}

std::vector<TagLabel> EncodeTetra(const ConstTree &tree) {
  BinaryTree binary = Binarize(CollapseUnaries(tree));
  PathCollector collector;
  collector.Visit(binary.root);
  // Each path runs root .. leaf, leaf included.
  const auto &paths = collector.paths;
  std::vector<TagLabel> labels;
  labels.reserve(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) {
    const auto &path = paths[i];
    // The unit is the leaf, or the preterminal chain above it.
    size_t unit = path.size() - 1;
    std::string unary;
    if (path.size() >= 3 && path[path.size() - 2]->is_preterminal()) {
      --unit;
      unary = path[unit]->label;
    }
    const Node *parent = unit > 0 ? path[unit - 1] : nullptr;
    TagLabel label;
    label.word_tag = IsLeftChild(parent, path[unit]) ? 'l' : 'r';
    label.unary = std::move(unary);
    if (i + 1 < paths.size()) {
      const auto &next = paths[i + 1];
      size_t common = 0;
      while (common < path.size() && common < next.size() &&
             path[common] == next[common]) {
        ++common;
      }
      const Node *lca = path[common - 1];
      const Node *lca_parent = common >= 2 ? path[common - 2] : nullptr;
      label.fence_tag = IsLeftChild(lca_parent, lca) ? 'L' : 'R';
      label.nonterminal = lca->label;
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

// ---------------------------------------------------------------------------
// Decoding

// Mutable tree under construction. Node 0 is created by the caller.
struct Builder {
  struct Item {
    std::string label;
    bool labeled = false;
    std::vector<int> kids;
    int leaf = -1;
    // Unit: a leaf or the preterminal chain wrapping it.
    bool unit = false;
    // Tetra node still waiting for its right child.
    bool open = false;
  };
  std::vector<Item> items;

  int Add(Item item) {
    items.push_back(std::move(item));
    return static_cast<int>(items.size()) - 1;
  }

  int AddUnit(int token, const std::string &unary) {
    Item leaf;
    leaf.leaf = token;
    leaf.unit = unary.empty();
    int id = Add(std::move(leaf));
    if (unary.empty()) return id;
    Item chain;
    chain.label = unary;
    chain.labeled = true;
    chain.unit = true;
    chain.kids.push_back(id);
    return Add(std::move(chain));
  }

  // Open and unlabeled nodes come out with an empty label and are spliced
  // away by Normalize.
  Node Emit(int id, const std::vector<std::string> &tokens) const {
    const Item &item = items[id];
    if (item.leaf >= 0) return Node::Leaf(item.leaf, tokens[item.leaf]);
    Node node = Node::Nonterminal(
        item.labeled && !item.open ? item.label : std::string(), {});
    node.children.reserve(item.kids.size());
    for (int kid : item.kids) node.children.push_back(Emit(kid, tokens));
    return node;
  }
};

bool Removable(const Node &node) {
  return node.label.empty() || IsPrimed(node.label) ||
         IsReservedLabel(node.label);
}

// Splices removable non-root nodes into their parents, bottom-up.
void SpliceRemovable(Node *node) {
  std::vector<Node> children;
  children.reserve(node->children.size());
  for (Node &child : node->children) {
    if (child.is_leaf()) {
      children.push_back(std::move(child));
      continue;
    }
    SpliceRemovable(&child);
    if (Removable(child) || child.children.empty()) {
      for (Node &grandchild : child.children) {
        children.push_back(std::move(grandchild));
      }
    } else {
      children.push_back(std::move(child));
    }
  }
  node->children = std::move(children);
}

// A prime marks the whole collapsed chain as intermediate, so it is cleared
// before the chain is split.
void ClearPrimed(Node *node) {
  for (Node &child : node->children) {
    if (child.is_leaf()) continue;
    if (IsPrimed(child.label)) child.label.clear();
    ClearPrimed(&child);
  }
}

ConstTree Normalize(Node root) {
  ClearPrimed(&root);
  ConstTree tree = ExpandUnaries(ConstTree{std::move(root)});
  // Expansion of a reserved chain may leave a labeled root; the root is
  // always the synthetic symbol.
  if (tree.root.label != kRootLabel) {
    if (Removable(tree.root)) {
      tree.root.label = std::string(kRootLabel);
    } else {
      tree.root = Node::Nonterminal(std::string(kRootLabel), {std::move(tree.root)});
    }
  }
  SpliceRemovable(&tree.root);
  return tree;
}

// Collects strict-mode failures; in repair mode failures are ignored and the
// caller applies the matching heuristic.
class Checker {
 public:
  explicit Checker(DecodeMode mode) : mode_(mode) {}
  bool strict() const { return mode_ == DecodeMode::kStrict; }
  void Fail(int position, const std::string &reason) const {
    if (strict()) throw DecodeError(position, reason);
  }

 private:
  DecodeMode mode_;
};

bool ValidChainLabel(const std::string &label) {
  if (label.empty()) return true;
  size_t pos = 0;
  while (pos <= label.size()) {
    size_t next = label.find(kUnaryJoin, pos);
    if (next == std::string::npos) next = label.size();
    std::string_view part = std::string_view(label).substr(pos, next - pos);
    if (part.empty() || IsPrimed(part) || IsReservedLabel(part)) return false;
    pos = next + 1;
  }
  return true;
}

void CheckUnary(const TagLabel &label, int position, const Checker &check) {
  if (!ValidChainLabel(label.unary)) {
    check.Fail(position, "invalid unary chain '" + label.unary + "'");
  }
}

ConstTree DecodeDepth(const std::vector<TagLabel> &labels,
                      const std::vector<std::string> &tokens, Scheme scheme,
                      const Checker &check) {
  const int n = static_cast<int>(labels.size());
  Builder builder;
  Builder::Item root;
  root.label = std::string(kRootLabel);
  root.labeled = true;
  builder.Add(std::move(root));
  std::vector<int> spine = {0};
  // Position that created each node, for diagnostics.
  std::vector<int> created_at = {0};

  int previous = 0;
  for (int i = 0; i < n; ++i) {
    const TagLabel &label = labels[i];
    int depth = label.value;
    if (scheme == Scheme::kRelative ||
        (scheme == Scheme::kDynamic && !label.absolute)) {
      depth = previous + label.value;
    }
    // Every level opened here must be labeled by this or a later position,
    // which bounds the legal depths.
    const int max_depth = static_cast<int>(spine.size()) + (n - i);
    if (depth < 1 || depth > max_depth) {
      check.Fail(i, "depth " + std::to_string(depth) + " is out of range");
      depth = std::clamp(depth, 1, max_depth);
    }
    if (i == n - 1 && depth != 1) {
      check.Fail(i, "last token must close at the root, got depth " +
                        std::to_string(depth));
    }
    previous = depth;
    CheckUnary(label, i, check);

    while (static_cast<int>(spine.size()) < depth) {
      int id = builder.Add({});
      builder.items[spine.back()].kids.push_back(id);
      spine.push_back(id);
      created_at.push_back(i);
    }
    int unit = builder.AddUnit(i, label.unary);
    builder.items[spine.back()].kids.push_back(unit);
    created_at.resize(builder.items.size(), i);

    Builder::Item &target = builder.items[spine[depth - 1]];
    const std::string &nonterminal = label.nonterminal;
    if (nonterminal.empty()) {
      check.Fail(i, "missing non-terminal");
    } else if (depth > 1 && !ValidChainLabel(nonterminal)) {
      check.Fail(i, "invalid non-terminal '" + nonterminal + "'");
    }
    if (!nonterminal.empty()) {
      if (!target.labeled) {
        target.label = nonterminal;
        target.labeled = true;
      } else if (target.label != nonterminal) {
        // Keep the first label.
        check.Fail(i, "conflicting non-terminal '" + nonterminal +
                          "' for node labeled '" + target.label + "'");
      }
    }
    spine.resize(depth);
  }
  if (check.strict()) {
    for (size_t id = 0; id < builder.items.size(); ++id) {
      const Builder::Item &item = builder.items[id];
      if (item.leaf < 0 && !item.labeled) {
        check.Fail(created_at[id], "non-terminal never receives a label");
      }
    }
  }
  return Normalize(builder.Emit(0, tokens));
}

ConstTree DecodeTetra(const std::vector<TagLabel> &labels,
                      const std::vector<std::string> &tokens,
                      const Checker &check) {
  const int n = static_cast<int>(labels.size());
  Builder builder;
  // Stack of partial trees, each with at most one open node (its hole).
  std::vector<int> stack;
  std::vector<int> holes;

  auto attach_unattached = [&](int unit) {
    // Lowest non-terminal on the rightmost spine of the top tree.
    int node = stack.empty() ? -1 : stack.back();
    if (node < 0 || builder.items[node].unit) {
      stack.push_back(unit);
      holes.push_back(-1);
      return;
    }
    while (true) {
      const Builder::Item &item = builder.items[node];
      if (item.open || item.kids.empty()) break;
      int last = item.kids.back();
      if (builder.items[last].unit || builder.items[last].leaf >= 0) break;
      node = last;
    }
    builder.items[node].kids.push_back(unit);
  };

  auto place_left = [&](int i, int child) {
    const Builder::Item &item = builder.items[child];
    if (item.leaf < 0 && item.labeled && IsPrimed(item.label)) {
      check.Fail(i, "prime-marked node '" + item.label + "' as a left child");
    }
  };

  for (int i = 0; i < n; ++i) {
    const TagLabel &label = labels[i];
    CheckUnary(label, i, check);
    int unit = builder.AddUnit(i, label.unary);
    if (label.word_tag == 'l') {
      stack.push_back(unit);
      holes.push_back(-1);
    } else if (label.word_tag == 'r' && !stack.empty() && holes.back() >= 0) {
      Builder::Item &hole = builder.items[holes.back()];
      hole.kids.push_back(unit);
      hole.open = false;
      holes.back() = -1;
    } else {
      check.Fail(i, label.word_tag == 'r'
                        ? "right leaf without an open slot"
                        : "invalid word tag");
      attach_unattached(unit);
    }

    if (i == n - 1) {
      if (label.fence_tag != 0) check.Fail(i, "fencepost tag on last token");
      break;
    }
    if (label.fence_tag != 'L' && label.fence_tag != 'R') {
      check.Fail(i, "missing fencepost tag");
      continue;
    }
    if (label.nonterminal.empty()) {
      check.Fail(i, "missing non-terminal");
    } else if (label.nonterminal != kRootLabel) {
      std::string base = label.nonterminal;
      if (IsPrimed(base)) base.pop_back();
      if (base != kRootLabel && (base.empty() || !ValidChainLabel(base))) {
        check.Fail(i, "invalid non-terminal '" + label.nonterminal + "'");
      }
    }
    if (stack.empty() || holes.back() >= 0) {
      check.Fail(i, "fencepost over an incomplete subtree");
      continue;
    }
    if (label.fence_tag == 'R' &&
        (stack.size() < 2 || holes[holes.size() - 2] < 0)) {
      check.Fail(i, "right fencepost without an open slot");
      continue;
    }
    Builder::Item node;
    node.label = label.nonterminal;
    node.labeled = !label.nonterminal.empty();
    node.open = true;
    node.kids.push_back(stack.back());
    place_left(i, stack.back());
    int id = builder.Add(std::move(node));
    if (label.fence_tag == 'L') {
      stack.back() = id;
      holes.back() = id;
    } else {
      stack.pop_back();
      holes.pop_back();
      Builder::Item &hole = builder.items[holes.back()];
      hole.kids.push_back(id);
      hole.open = false;
      holes.back() = id;
    }
  }

  if (stack.size() != 1) {
    check.Fail(n - 1, std::to_string(stack.size()) +
                          " partial trees remain after the last token");
  } else if (holes.back() >= 0) {
    check.Fail(n - 1, "open node remains after the last token");
  }

  int root;
  const bool single_root = stack.size() == 1 && holes.back() < 0 &&
                           builder.items[stack.back()].labeled &&
                           builder.items[stack.back()].label == kRootLabel;
  if (single_root) {
    root = stack.back();
  } else {
    if (stack.size() == 1) place_left(n - 1, stack.back());
    Builder::Item item;
    item.label = std::string(kRootLabel);
    item.labeled = true;
    item.kids = stack;
    root = builder.Add(std::move(item));
  }
  Node tree = builder.Emit(root, tokens);
  if (check.strict()) {
    try {
      return Normalize(Debinarize(BinaryTree{std::move(tree)}).root);
    } catch (const StructureError &e) {
      throw DecodeError(n - 1, e.what());
    }
  }
  return Normalize(std::move(tree));
}

}  // namespace

std::vector<TagLabel> Encode(const ConstTree &tree, Scheme scheme) {
  if (scheme == Scheme::kTetra) return EncodeTetra(tree);
  return EncodeDepth(tree, scheme);
}

ConstTree Decode(const std::vector<TagLabel> &labels,
                 const std::vector<std::string> &tokens, Scheme scheme,
                 DecodeMode mode) {
  if (labels.empty() || labels.size() != tokens.size()) {
    throw std::invalid_argument("decode needs one label per token and at "
                                "least one token");
  }
  Checker check(mode);
  if (scheme == Scheme::kTetra) return DecodeTetra(labels, tokens, check);
  return DecodeDepth(labels, tokens, scheme, check);
}

}  // namespace nnerlin
