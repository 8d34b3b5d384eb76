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

#ifndef TREESUM_METRICS_HPP_
#define TREESUM_METRICS_HPP_

// Summary quality metrics: diversity, query closeness and average level
// difference.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

inline constexpr std::size_t kDefaultQueryCount = 500;

struct MetricReport {
  double div = 0.0;
  double cq = 0.0;
  double ald = 0.0;
  std::uint64_t query_seed = 0;
  std::size_t query_count = kDefaultQueryCount;

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

namespace detail {

inline std::vector<char> membership(std::size_t n, std::span<const NodeId> selected) {
  std::vector<char> in(n, 0);
  for (NodeId x : selected) in[x.index()] = 1;
  return in;
}

// Deepest selected member of anc(y) for every y, top-down.
inline std::vector<std::optional<NodeId>> nearest_selected_ancestor(
    const Tree& tree, std::span<const NodeId> selected) {
  const auto in = membership(tree.size(), selected);
  std::vector<std::optional<NodeId>> nearest(tree.size());
  for (NodeId y : tree.preorder()) {
    if (in[y.index()]) {
      nearest[y.index()] = y;
    } else if (auto p = tree.parent(y)) {
      nearest[y.index()] = nearest[p->index()];
    }
  }
  return nearest;
}

inline double weight_gap(const WeightedTreePair& pair, NodeId y) {
  const Weight a = pair.freq1(y);
  const Weight b = pair.freq2(y);
  return static_cast<double>(a > b ? a - b : b - a);
}

}  // namespace detail

// Div(S): each node's weight gap, discounted by its level distance to the
// nearest selected ancestor. Uncovered nodes contribute nothing.
inline double diversity(const WeightedTreePair& pair, std::span<const NodeId> selected) {
  const Tree& tree = pair.tree();
  const auto nearest = detail::nearest_selected_ancestor(tree, selected);
  double acc = 0.0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const NodeId y = node_id(i);
    if (!nearest[i]) continue;
    acc += detail::weight_gap(pair, y) * level_distance(tree, *nearest[i], y);
  }
  return acc;
}

// Hop distance from every node to its closest selected node (multi-source BFS
// over the undirected tree).
inline std::vector<std::uint32_t> distance_to_selection(const Tree& tree,
                                                        std::span<const NodeId> selected) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(tree.size(), kUnset);
  std::deque<NodeId> frontier;
  for (NodeId x : selected) {
    if (dist[x.index()] == kUnset) {
      dist[x.index()] = 0;
      frontier.push_back(x);
    }
  }
  auto relax = [&](NodeId from, NodeId to) {
    if (dist[to.index()] != kUnset) return;
    dist[to.index()] = dist[from.index()] + 1;
    frontier.push_back(to);
  };
  while (!frontier.empty()) {
    const NodeId x = frontier.front();
    frontier.pop_front();
    if (auto p = tree.parent(x)) relax(x, *p);
    for (NodeId c : tree.children(x)) relax(x, c);
  }
  return dist;
}

// The query sample: without replacement when the tree has at least
// query_count nodes, otherwise with replacement.
inline std::vector<NodeId> draw_queries(const Tree& tree, std::uint64_t seed,
                                        std::size_t query_count) {
  std::mt19937_64 rng(seed);
  std::vector<NodeId> out;
  out.reserve(query_count);
  const std::size_t n = tree.size();
  if (n >= query_count) {
    std::vector<NodeId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = node_id(i);
    std::sample(all.begin(), all.end(), std::back_inserter(out), query_count, rng);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < query_count; ++i) out.push_back(node_id(pick(rng)));
  }
  return out;
}

inline double query_closeness(const WeightedTreePair& pair, std::span<const NodeId> selected,
                              std::span<const NodeId> queries) {
  if (selected.empty()) throw Error(ErrorCode::kEmptySelection, "");
  const auto dist = distance_to_selection(pair.tree(), selected);
  double acc = 0.0;
  for (NodeId q : queries) acc += dist[q.index()];
  return acc;
}

// C_Q(S) over a seeded random query set.
inline double query_closeness(const WeightedTreePair& pair, std::span<const NodeId> selected,
                              std::uint64_t seed, std::size_t query_count = kDefaultQueryCount) {
  if (selected.empty()) throw Error(ErrorCode::kEmptySelection, "");
  const auto queries = draw_queries(pair.tree(), seed, query_count);
  return query_closeness(pair, selected, std::span<const NodeId>(queries));
}

// Ald(S): gap-weighted mean of level(y) - level(nearest selected ancestor).
// Nodes with no selected ancestor or no weight gap are left out; 0 when
// nothing remains.
inline double avg_level_difference(const WeightedTreePair& pair,
                                   std::span<const NodeId> selected) {
  const Tree& tree = pair.tree();
  const auto nearest = detail::nearest_selected_ancestor(tree, selected);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const NodeId y = node_id(i);
    const double alpha = detail::weight_gap(pair, y);
    if (!nearest[i] || alpha == 0.0) continue;
    num += static_cast<double>(tree.level(y) - tree.level(*nearest[i])) * alpha;
    den += alpha;
  }
  return den == 0.0 ? 0.0 : num / den;
}

inline MetricReport evaluate(const WeightedTreePair& pair, std::span<const NodeId> selected,
                             std::uint64_t seed, std::size_t query_count = kDefaultQueryCount) {
  MetricReport r;
  r.div = diversity(pair, selected);
  r.cq = query_closeness(pair, selected, seed, query_count);
  r.ald = avg_level_difference(pair, selected);
  r.query_seed = seed;
  r.query_count = query_count;
  return r;
}

}  // namespace treesum

#endif  // TREESUM_METRICS_HPP_
