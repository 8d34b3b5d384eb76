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

#ifndef TREESUM_ALIGNMENT_HPP_
#define TREESUM_ALIGNMENT_HPP_

// Combining two trees whose structures differ. Nodes correspond when their
// label paths from the root are equal.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

namespace detail {

using ChildKey = std::pair<std::uint32_t, std::string>;

inline void check_sibling_labels(const Tree& tree) {
  for (NodeId x : tree.preorder()) {
    std::vector<std::string> seen;
    for (NodeId c : tree.children(x)) seen.push_back(tree.label(c));
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) throw Error(ErrorCode::kDuplicateLabel, *dup, "siblings share a label");
  }
}

}  // namespace detail

// Union of both topologies keyed by label path. A node missing from one tree
// gets weight 0 there. A keeps its node ids; B's extra nodes are appended in
// B's preorder, so children list A's children first, then B's additions.
inline WeightedTreePair zero_fill_align(const WeightedTree& a, const WeightedTree& b) {
  const Tree& ta = a.tree();
  const Tree& tb = b.tree();
  if (ta.label(ta.root()) != tb.label(tb.root())) {
    throw Error(ErrorCode::kRootLabelMismatch, ta.label(ta.root()) + " vs " + tb.label(tb.root()));
  }
  detail::check_sibling_labels(ta);
  detail::check_sibling_labels(tb);

  std::vector<std::string> labels = ta.labels();
  std::vector<std::optional<NodeId>> parents = ta.parents();
  std::vector<Weight> w1(a.weights().begin(), a.weights().end());
  std::vector<Weight> w2(ta.size(), 0);

  std::map<detail::ChildKey, NodeId> child_of;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (auto p = parents[i]) child_of.emplace(detail::ChildKey{p->value, labels[i]}, node_id(i));
  }

  std::vector<NodeId> image(tb.size());
  for (NodeId y : tb.preorder()) {
    NodeId target;
    if (y == tb.root()) {
      target = ta.root();
    } else {
      const NodeId up = image[tb.parent(y)->index()];
      const detail::ChildKey key{up.value, tb.label(y)};
      auto it = child_of.find(key);
      if (it != child_of.end()) {
        target = it->second;
      } else {
        target = node_id(labels.size());
        labels.push_back(tb.label(y));
        parents.push_back(up);
        w1.push_back(0);
        w2.push_back(0);
        child_of.emplace(key, target);
      }
    }
    image[y.index()] = target;
    w2[target.index()] = b.weight(y);
  }
  return WeightedTreePair(Tree::from_parents(std::move(labels), std::move(parents)),
                          std::move(w1), std::move(w2));
}

struct MatchScore {
  double coverage = 0.0;          // matched fraction of the small tree
  double weight_agreement = 0.0;  // Σmin / Σmax over matched weights
  double level_offset = 0.0;      // level of the anchor in the big tree
  NodeId anchor;
};

// Places small's root at the shallowest node of big with the same label
// (smallest id on ties) and matches downward by child label.
inline MatchScore subtree_match_score(const WeightedTree& big, const WeightedTree& small) {
  const Tree& tb = big.tree();
  const Tree& ts = small.tree();
  const std::string& root_label = ts.label(ts.root());
  std::optional<NodeId> anchor;
  for (std::size_t i = 0; i < tb.size(); ++i) {
    const NodeId x = node_id(i);
    if (tb.label(x) != root_label) continue;
    if (!anchor || tb.level(x) < tb.level(*anchor)) anchor = x;
  }
  if (!anchor) throw Error(ErrorCode::kNoAnchor, root_label);

  std::vector<std::optional<NodeId>> image(ts.size());
  image[ts.root().index()] = *anchor;
  std::size_t matched = 0;
  double sum_min = 0.0;
  double sum_max = 0.0;
  for (NodeId y : ts.preorder()) {
    if (y != ts.root()) {
      const auto& up = image[ts.parent(y)->index()];
      if (!up) continue;
      for (NodeId c : tb.children(*up)) {
        if (tb.label(c) == ts.label(y)) {
          image[y.index()] = c;
          break;
        }
      }
    }
    if (!image[y.index()]) continue;
    ++matched;
    const Weight ws = small.weight(y);
    const Weight wb = big.weight(*image[y.index()]);
    sum_min += static_cast<double>(std::min(ws, wb));
    sum_max += static_cast<double>(std::max(ws, wb));
  }
  MatchScore out;
  out.anchor = *anchor;
  out.coverage = static_cast<double>(matched) / static_cast<double>(ts.size());
  out.weight_agreement = sum_max == 0.0 ? 1.0 : sum_min / sum_max;
  out.level_offset = static_cast<double>(tb.level(*anchor));
  return out;
}

}  // namespace treesum

#endif  // TREESUM_ALIGNMENT_HPP_
