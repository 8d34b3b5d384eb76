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

#ifndef TREESUM_SVDT_HPP_
#define TREESUM_SVDT_HPP_

// Lazy greedy selection of similarity and difference representatives, and
// the k1/k2 combination search built on top of it.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <vector>

#include "treesum/scoring.hpp"

namespace treesum {

// Which nodes may become representatives. Leaves are included by default;
// kNonLeaf restricts the pool to internal nodes (plus a lone root).
enum class CandidatePool { kAllNodes, kNonLeaf };

inline std::vector<NodeId> candidate_nodes(const Tree& tree, CandidatePool pool) {
  std::vector<NodeId> out;
  out.reserve(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const NodeId x = node_id(i);
    if (pool == CandidatePool::kNonLeaf && tree.is_leaf(x) && tree.size() > 1) continue;
    out.push_back(x);
  }
  return out;
}

struct TraceStep {
  NodeId node;
  Side side = Side::kSim;
  double gain = 0.0;
  std::size_t pops = 0;  // queue pops spent on this pick
};

struct GreedyTrace {
  std::vector<TraceStep> steps;
  std::size_t total_pops = 0;
  // Set when the loop stopped before the budget because no candidate had a
  // positive gain left.
  bool truncated = false;
};

struct SvdtResult {
  SummarySelection selection;
  GreedyTrace trace;
  double score = 0.0;  // sum of committed gains
};

namespace detail {

struct QueueEntry {
  double key;
  NodeId node;
};

// Max-heap on key, smaller node id first among equal keys.
struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.key != b.key) return a.key < b.key;
    return a.node > b.node;
  }
};

using CandidateQueue = std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder>;

inline std::size_t effective_budget(std::size_t k, std::size_t candidates) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k", "must be >= 1");
  return std::min(k, candidates);
}

}  // namespace detail

// CELF-style greedy over both sides at once. Each candidate caches one value
// per side together with the side size it was computed at; a popped entry
// whose winning side is stale is refreshed and pushed back. Cached values
// are upper bounds because each side of the objective is submodular, so a
// fresh top entry is the true best (node, side) pair. Ties between the sides
// go to similarity.
inline SvdtResult svdt_greedy(const SummaryObjective& obj, std::size_t k,
                              CandidatePool pool = CandidatePool::kAllNodes) {
  const auto candidates = candidate_nodes(obj.tree(), pool);
  const std::size_t budget = detail::effective_budget(k, candidates.size());
  const std::size_t n = obj.pair().size();

  CoverageState sim_state(obj, Side::kSim);
  CoverageState dif_state(obj, Side::kDif);
  std::vector<double> v_sim(n, 0.0), v_dif(n, 0.0);
  std::vector<std::size_t> round_sim(n, 0), round_dif(n, 0);

  detail::CandidateQueue queue;
  for (NodeId x : candidates) {
    v_sim[x.index()] = sim_state.gain(x);
    v_dif[x.index()] = dif_state.gain(x);
    queue.push({std::max(v_sim[x.index()], v_dif[x.index()]), x});
  }

  SvdtResult result;
  result.selection.k = k;
  std::size_t pops = 0;
  while (result.selection.size() < budget && !queue.empty()) {
    const NodeId x = queue.top().node;
    queue.pop();
    ++pops;
    const std::size_t i = x.index();
    const bool sim_wins = v_sim[i] >= v_dif[i];
    if (sim_wins && round_sim[i] < result.selection.s1.size()) {
      v_sim[i] = sim_state.gain(x);
      round_sim[i] = result.selection.s1.size();
      queue.push({std::max(v_sim[i], v_dif[i]), x});
      continue;
    }
    if (!sim_wins && round_dif[i] < result.selection.s2.size()) {
      v_dif[i] = dif_state.gain(x);
      round_dif[i] = result.selection.s2.size();
      queue.push({std::max(v_sim[i], v_dif[i]), x});
      continue;
    }
    const double gain = sim_wins ? v_sim[i] : v_dif[i];
    if (!(gain > 0.0)) {
      result.trace.truncated = true;
      break;
    }
    const Side side = sim_wins ? Side::kSim : Side::kDif;
    (sim_wins ? sim_state : dif_state).add(x);
    result.selection.insert(x, side);
    result.score += gain;
    result.trace.steps.push_back({x, side, gain, pops});
    result.trace.total_pops += pops;
    pops = 0;
  }
  result.trace.total_pops += pops;
  if (result.selection.size() < budget) result.trace.truncated = true;
  return result;
}

inline SvdtResult svdt_greedy(const WeightedTreePair& pair, std::size_t k, std::size_t beta,
                              CandidatePool pool = CandidatePool::kAllNodes) {
  const SummaryObjective obj(pair, beta);
  return svdt_greedy(obj, k, pool);
}

namespace detail {

// Lazy greedy on one side only, skipping nodes already taken. Stops early
// once no candidate adds anything.
inline void fill_side(const SummaryObjective& obj, Side side, std::size_t count,
                      std::span<const NodeId> candidates, SummarySelection& sel) {
  if (count == 0) return;
  CoverageState state(obj, side);
  for (NodeId x : sel.side(side)) state.add(x);
  std::vector<std::size_t> round(obj.pair().size(), 0);
  CandidateQueue queue;
  for (NodeId x : candidates) {
    if (!sel.contains(x)) queue.push({state.gain(x), x});
  }
  std::size_t added = 0;
  while (added < count && !queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (round[top.node.index()] < added) {
      round[top.node.index()] = added;
      queue.push({state.gain(top.node), top.node});
      continue;
    }
    if (!(top.key > 0.0)) break;
    state.add(top.node);
    sel.insert(top.node, side);
    ++added;
  }
}

}  // namespace detail

struct SplitResult {
  SummarySelection selection;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  double score = 0.0;
};

// Walks k1 = k..0 (k2 = k - k1). Each combination is filled greedily, larger
// side first (difference first on a tie). A combination replaces the
// incumbent when the similarity change plus the difference change against
// the incumbent is positive.
inline SplitResult optimize_k_split(const SummaryObjective& obj, std::size_t k,
                                    CandidatePool pool = CandidatePool::kAllNodes) {
  const auto candidates = candidate_nodes(obj.tree(), pool);
  const std::size_t budget = detail::effective_budget(k, candidates.size());

  SplitResult best;
  double best_sim = 0.0;
  double best_dif = 0.0;
  bool have_incumbent = false;
  for (std::size_t k1 = budget + 1; k1-- > 0;) {
    const std::size_t k2 = budget - k1;
    SummarySelection sel;
    sel.k = k;
    const Side first = k1 > k2 ? Side::kSim : Side::kDif;
    const Side second = first == Side::kSim ? Side::kDif : Side::kSim;
    detail::fill_side(obj, first, first == Side::kSim ? k1 : k2, candidates, sel);
    detail::fill_side(obj, second, second == Side::kSim ? k1 : k2, candidates, sel);
    const ScoreResult score = summary_score(obj, sel);
    const double delta_sim = score.sim_value - best_sim;
    const double delta_dif = score.dif_value - best_dif;
    if (!have_incumbent || delta_sim + delta_dif > 0.0) {
      have_incumbent = true;
      best = SplitResult{std::move(sel), k1, k2, score.value};
      best_sim = score.sim_value;
      best_dif = score.dif_value;
    }
  }
  return best;
}

inline SplitResult optimize_k_split(const WeightedTreePair& pair, std::size_t k, std::size_t beta,
                                    CandidatePool pool = CandidatePool::kAllNodes) {
  const SummaryObjective obj(pair, beta);
  return optimize_k_split(obj, k, pool);
}

}  // namespace treesum

#endif  // TREESUM_SVDT_HPP_
