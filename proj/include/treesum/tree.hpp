// Copyright 2026 The treesum Authors.
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

#ifndef TREESUM_TREE_HPP_
#define TREESUM_TREE_HPP_

// Rooted-tree topology, the two weight functions over it, and the primitive
// per-node quantities (levels, ancestor/descendant sets, level distance,
// differential weight, scaling coefficient).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treesum/error.hpp"

namespace treesum {

using Weight = std::uint64_t;

struct NodeId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const noexcept { return value; }
  constexpr auto operator<=>(const NodeId&) const = default;
};

constexpr NodeId node_id(std::size_t index) noexcept {
  return NodeId{static_cast<std::uint32_t>(index)};
}

// Immutable rooted topology with labels. Node ids are dense and children are
// kept in ascending id order, which is the input order for every builder in
// this library.
class Tree {
 public:
  // Validates that exactly one node is parentless, that every parent id is in
  // range and that every node reaches the root.
  static Tree from_parents(std::vector<std::string> labels,
                           std::vector<std::optional<NodeId>> parents) {
    if (labels.size() != parents.size()) {
      throw Error(ErrorCode::kInvalidArgument, "",
                  "labels and parents differ in length");
    }
    if (labels.empty()) throw Error(ErrorCode::kEmptyTree, "");
    Tree t;
    const std::size_t n = labels.size();
    t.labels_ = std::move(labels);
    t.parent_ = std::move(parents);
    t.child_offset_.assign(n + 1, 0);

    std::optional<NodeId> root;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = t.parent_[i];
      if (!p) {
        if (root) throw Error(ErrorCode::kMultipleRoots, t.labels_[i]);
        root = node_id(i);
        continue;
      }
      if (p->index() >= n) throw Error(ErrorCode::kUnknownParent, t.labels_[i]);
      if (p->index() == i) throw Error(ErrorCode::kCycleDetected, t.labels_[i]);
      ++t.child_offset_[p->index() + 1];
    }
    if (!root) throw Error(ErrorCode::kCycleDetected, t.labels_.front());
    t.root_ = *root;

    for (std::size_t i = 0; i < n; ++i) t.child_offset_[i + 1] += t.child_offset_[i];
    t.child_ids_.resize(n - 1);
    std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (const auto& p = t.parent_[i]) t.child_ids_[fill[p->index()]++] = node_id(i);
    }

    // Iterative preorder; children pushed in reverse so they pop in order.
    t.level_.assign(n, 0);
    t.enter_.assign(n, 0);
    t.exit_.assign(n, 0);
    t.preorder_.reserve(n);
    std::vector<NodeId> stack{t.root_};
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      t.enter_[x.index()] = static_cast<std::uint32_t>(t.preorder_.size());
      t.preorder_.push_back(x);
      const auto kids = t.children(x);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        t.level_[it->index()] = t.level_[x.index()] + 1;
        stack.push_back(*it);
      }
    }
    if (t.preorder_.size() != n) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i != t.root_.index() && t.enter_[i] == 0) {
          throw Error(ErrorCode::kCycleDetected, t.labels_[i]);
        }
      }
    }
    // Subtree sizes from the reversed preorder give exit positions.
    std::vector<std::uint32_t> size(n, 1);
    for (auto it = t.preorder_.rbegin(); it != t.preorder_.rend(); ++it) {
      if (const auto& p = t.parent_[it->index()]) size[p->index()] += size[it->index()];
    }
    for (std::size_t i = 0; i < n; ++i) t.exit_[i] = t.enter_[i] + size[i];
    return t;
  }

  std::size_t size() const noexcept { return labels_.size(); }
  NodeId root() const noexcept { return root_; }
  std::optional<NodeId> parent(NodeId x) const { return parent_[x.index()]; }
  const std::string& label(NodeId x) const { return labels_[x.index()]; }
  std::uint32_t level(NodeId x) const { return level_[x.index()]; }
  bool is_leaf(NodeId x) const { return children(x).empty(); }

  std::span<const NodeId> children(NodeId x) const {
    const auto b = child_offset_[x.index()];
    const auto e = child_offset_[x.index() + 1];
    return std::span<const NodeId>(child_ids_).subspan(b, e - b);
  }

  // Nodes in depth-first preorder; every subtree is a contiguous slice.
  std::span<const NodeId> preorder() const noexcept { return preorder_; }
  // Position of x in preorder(); subtree(x) starts there.
  std::size_t preorder_index(NodeId x) const { return enter_[x.index()]; }

  // des(x) as a preorder slice, x first.
  std::span<const NodeId> subtree(NodeId x) const {
    return std::span<const NodeId>(preorder_).subspan(
        enter_[x.index()], exit_[x.index()] - enter_[x.index()]);
  }

  std::size_t subtree_size(NodeId x) const {
    return exit_[x.index()] - enter_[x.index()];
  }

  // True when x ∈ anc(y), equivalently y ∈ des(x). Reflexive.
  bool is_ancestor(NodeId x, NodeId y) const {
    return enter_[x.index()] <= enter_[y.index()] &&
           enter_[y.index()] < exit_[x.index()];
  }

  std::vector<NodeId> descendants(NodeId x) const {
    auto s = subtree(x);
    std::vector<NodeId> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<NodeId> ancestors(NodeId x) const {
    std::vector<NodeId> out;
    for (std::optional<NodeId> cur = x; cur; cur = parent(*cur)) out.push_back(*cur);
    std::sort(out.begin(), out.end());
    return out;
  }

  NodeId lowest_common_ancestor(NodeId a, NodeId b) const {
    while (level(a) > level(b)) a = *parent(a);
    while (level(b) > level(a)) b = *parent(b);
    while (a != b) {
      a = *parent(a);
      b = *parent(b);
    }
    return a;
  }

  // Undirected hop count.
  std::uint32_t distance(NodeId a, NodeId b) const {
    const NodeId lca = lowest_common_ancestor(a, b);
    return level(a) + level(b) - 2 * level(lca);
  }

  std::vector<std::optional<NodeId>> parents() const { return parent_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  Tree() = default;

  NodeId root_{};
  std::vector<std::string> labels_;
  std::vector<std::optional<NodeId>> parent_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<NodeId> child_ids_;
  std::vector<std::uint32_t> level_;
  std::vector<NodeId> preorder_;
  std::vector<std::uint32_t> enter_;
  std::vector<std::uint32_t> exit_;
};

// dis_x(y): 1/(level(y)-level(x)+1) inside des(x), else 0.
inline double level_distance(const Tree& tree, NodeId x, NodeId y) {
  if (!tree.is_ancestor(x, y)) return 0.0;
  return 1.0 / static_cast<double>(tree.level(y) - tree.level(x) + 1);
}

// A topology with one weight per node.
class WeightedTree {
 public:
  WeightedTree(Tree tree, std::vector<Weight> weight)
      : tree_(std::move(tree)), weight_(std::move(weight)) {
    if (weight_.size() != tree_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "", "weight vector size mismatch");
    }
  }

  const Tree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }
  Weight weight(NodeId x) const { return weight_[x.index()]; }
  std::span<const Weight> weights() const noexcept { return weight_; }

 private:
  Tree tree_;
  std::vector<Weight> weight_;
};

// One topology carrying the weights of both compared trees.
class WeightedTreePair {
 public:
  WeightedTreePair(Tree tree, std::vector<Weight> freq1, std::vector<Weight> freq2)
      : tree_(std::move(tree)), freq1_(std::move(freq1)), freq2_(std::move(freq2)) {
    if (freq1_.size() != tree_.size() || freq2_.size() != tree_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "", "weight vector size mismatch");
    }
  }

  const Tree& tree() const noexcept { return tree_; }
  std::size_t size() const noexcept { return tree_.size(); }
  Weight freq1(NodeId x) const { return freq1_[x.index()]; }
  Weight freq2(NodeId x) const { return freq2_[x.index()]; }
  std::span<const Weight> freq1() const noexcept { return freq1_; }
  std::span<const Weight> freq2() const noexcept { return freq2_; }

  // Same topology, new weights.
  WeightedTreePair with_weights(std::vector<Weight> freq1,
                                std::vector<Weight> freq2) const {
    return WeightedTreePair(tree_, std::move(freq1), std::move(freq2));
  }

 private:
  Tree tree_;
  std::vector<Weight> freq1_;
  std::vector<Weight> freq2_;
};

struct NodeSpec {
  std::string label;
  std::optional<std::string> parent;
  std::int64_t weight1 = 0;
  std::int64_t weight2 = 0;
};

// Builds a pair from label-addressed records. Labels must be unique here
// because parents are referenced by label; node ids follow input order.
inline WeightedTreePair build_tree(std::span<const NodeSpec> nodes) {
  if (nodes.empty()) throw Error(ErrorCode::kEmptyTree, "");
  std::unordered_map<std::string, NodeId> by_label;
  by_label.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].weight1 < 0 || nodes[i].weight2 < 0) {
      throw Error(ErrorCode::kNegativeWeight, nodes[i].label);
    }
    if (!by_label.emplace(nodes[i].label, node_id(i)).second) {
      throw Error(ErrorCode::kDuplicateLabel, nodes[i].label);
    }
  }
  std::vector<std::string> labels;
  std::vector<std::optional<NodeId>> parents;
  std::vector<Weight> w1, w2;
  labels.reserve(nodes.size());
  parents.reserve(nodes.size());
  w1.reserve(nodes.size());
  w2.reserve(nodes.size());
  for (const auto& n : nodes) {
    std::optional<NodeId> p;
    if (n.parent) {
      auto it = by_label.find(*n.parent);
      if (it == by_label.end()) throw Error(ErrorCode::kUnknownParent, *n.parent);
      p = it->second;
    }
    labels.push_back(n.label);
    parents.push_back(p);
    w1.push_back(static_cast<Weight>(n.weight1));
    w2.push_back(static_cast<Weight>(n.weight2));
  }
  return WeightedTreePair(Tree::from_parents(std::move(labels), std::move(parents)),
                          std::move(w1), std::move(w2));
}

inline WeightedTreePair build_tree(std::initializer_list<NodeSpec> nodes) {
  return build_tree(std::span<const NodeSpec>(nodes.begin(), nodes.size()));
}

// ω(x) = max(freq1, freq2).
inline Weight differential_weight(const WeightedTreePair& pair, NodeId x) {
  return std::max(pair.freq1(x), pair.freq2(x));
}

// γ: mean of min/|f1-f2| over the nodes whose two weights differ. Nodes with
// equal weights are left out of both the sum and the count; 1 when no node
// differs.
inline double scaling_coefficient(const WeightedTreePair& pair) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const Weight a = pair.freq1(node_id(i));
    const Weight b = pair.freq2(node_id(i));
    if (a == b) continue;
    const Weight gap = a > b ? a - b : b - a;
    sum += static_cast<double>(std::min(a, b)) / static_cast<double>(gap);
    ++count;
  }
  return count == 0 ? 1.0 : sum / static_cast<double>(count);
}

}  // namespace treesum

#endif  // TREESUM_TREE_HPP_
