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

#ifndef TREESUM_DISTRIBUTION_HPP_
#define TREESUM_DISTRIBUTION_HPP_

// Bottom-up top-beta similarity/difference distributions and the Hellinger
// score between them.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

// A (w1, w2) weight pair contributed by some node of the subtree. Padding
// entries are (0, 0) with no source.
struct RepEntry {
  Weight w1 = 0;
  Weight w2 = 0;
  std::optional<NodeId> source;

  Weight similarity() const noexcept { return std::min(w1, w2); }
  Weight difference() const noexcept { return w1 > w2 ? w1 - w2 : w2 - w1; }

  friend bool operator==(const RepEntry&, const RepEntry&) = default;
};

struct PairedDistribution {
  std::vector<RepEntry> sim_entries;  // exactly beta, by similarity desc
  std::vector<RepEntry> dif_entries;  // exactly beta, by difference desc

  // [w1, w2, w1, w2, ...], length 2*beta.
  static std::vector<Weight> flatten(std::span<const RepEntry> entries) {
    std::vector<Weight> out;
    out.reserve(entries.size() * 2);
    for (const auto& e : entries) {
      out.push_back(e.w1);
      out.push_back(e.w2);
    }
    return out;
  }
  std::vector<Weight> sim_vector() const { return flatten(sim_entries); }
  std::vector<Weight> dif_vector() const { return flatten(dif_entries); }
};

namespace detail {

// Larger value first; among equal values real entries before padding and
// smaller source ids first.
template <typename Key>
bool ranks_before(const RepEntry& a, const RepEntry& b, Key key) {
  const Weight ka = key(a);
  const Weight kb = key(b);
  if (ka != kb) return ka > kb;
  if (a.source.has_value() != b.source.has_value()) return a.source.has_value();
  return a.source && *a.source < *b.source;
}

template <typename Key>
std::vector<RepEntry> top_entries(std::vector<RepEntry> pool, std::size_t beta,
                                  Key key) {
  auto cmp = [&](const RepEntry& a, const RepEntry& b) { return ranks_before(a, b, key); };
  if (pool.size() > beta) {
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(beta),
                      pool.end(), cmp);
    pool.resize(beta);
  } else {
    std::sort(pool.begin(), pool.end(), cmp);
  }
  pool.resize(beta, RepEntry{});
  return pool;
}

inline auto similarity_key = [](const RepEntry& e) { return e.similarity(); };
inline auto difference_key = [](const RepEntry& e) { return e.difference(); };

inline void check_beta(std::size_t beta) {
  if (beta == 0) throw Error(ErrorCode::kInvalidArgument, "beta", "must be >= 1");
}

// Distribution of x given its children's finished distributions.
template <typename ChildDist>
PairedDistribution merge_up(const WeightedTreePair& pair, NodeId x,
                            std::size_t beta, ChildDist child_dist) {
  const RepEntry own{pair.freq1(x), pair.freq2(x), x};
  const auto kids = pair.tree().children(x);
  std::vector<RepEntry> sim_pool{own};
  std::vector<RepEntry> dif_pool{own};
  sim_pool.reserve(1 + kids.size() * beta);
  dif_pool.reserve(1 + kids.size() * beta);
  for (NodeId c : kids) {
    const PairedDistribution& d = child_dist(c);
    for (const auto& e : d.sim_entries) {
      if (e.source) sim_pool.push_back(e);
    }
    for (const auto& e : d.dif_entries) {
      if (e.source) dif_pool.push_back(e);
    }
  }
  return PairedDistribution{top_entries(std::move(sim_pool), beta, similarity_key),
                            top_entries(std::move(dif_pool), beta, difference_key)};
}

}  // namespace detail

// Post-order pass: each node keeps the top-beta entries of its own pair
// united with its children's lists, ranked by min(w1,w2) for similarity and
// |w1-w2| for difference.
inline std::vector<PairedDistribution> pass_up(const WeightedTreePair& pair,
                                               std::size_t beta) {
  detail::check_beta(beta);
  std::vector<PairedDistribution> dist(pair.size());
  const auto order = pair.tree().preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    dist[it->index()] = detail::merge_up(
        pair, *it, beta, [&](NodeId c) -> const PairedDistribution& { return dist[c.index()]; });
  }
  return dist;
}

// Hellinger distance between the normalized Sim_D and Dif_D vectors over all
// 2*beta interleaved coordinates. No difference mass gives 0; similarity
// mass zero with difference mass present gives 1.
inline double simdif_score(std::span<const Weight> sim, std::span<const Weight> dif) {
  double sim_total = 0.0;
  double dif_total = 0.0;
  for (Weight w : sim) sim_total += static_cast<double>(w);
  for (Weight w : dif) dif_total += static_cast<double>(w);
  if (dif_total == 0.0) return 0.0;
  if (sim_total == 0.0) return 1.0;
  const std::size_t n = std::max(sim.size(), dif.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = i < sim.size() ? static_cast<double>(sim[i]) / sim_total : 0.0;
    const double d = i < dif.size() ? static_cast<double>(dif[i]) / dif_total : 0.0;
    const double diff = std::sqrt(d) - std::sqrt(s);
    acc += diff * diff;
  }
  return std::clamp(std::sqrt(acc) / std::sqrt(2.0), 0.0, 1.0);
}

inline double simdif_score(const PairedDistribution& d) {
  const auto sim = d.sim_vector();
  const auto dif = d.dif_vector();
  return simdif_score(sim, dif);
}

// SimDif_D for every node. Distributions are released once the parent has
// consumed them, so memory stays proportional to the open frontier.
inline std::vector<double> all_scores(const WeightedTreePair& pair, std::size_t beta) {
  detail::check_beta(beta);
  const Tree& tree = pair.tree();
  std::vector<double> score(pair.size(), 0.0);
  std::vector<std::optional<PairedDistribution>> pending(pair.size());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId x = *it;
    PairedDistribution d = detail::merge_up(
        pair, x, beta, [&](NodeId c) -> const PairedDistribution& { return *pending[c.index()]; });
    for (NodeId c : tree.children(x)) pending[c.index()].reset();
    score[x.index()] = simdif_score(d);
    pending[x.index()] = std::move(d);
  }
  return score;
}

}  // namespace treesum

#endif  // TREESUM_DISTRIBUTION_HPP_
