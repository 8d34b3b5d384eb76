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

#ifndef TREESUM_BASELINES_HPP_
#define TREESUM_BASELINES_HPP_

// Single-tree baselines run on the common tree, and the exhaustive optimum
// used to check the greedy's approximation quality.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "treesum/scoring.hpp"
#include "treesum/svdt.hpp"

namespace treesum {

// Same topology, weight(x) = min(freq1(x), freq2(x)).
inline WeightedTree common_tree(const WeightedTreePair& pair) {
  std::vector<Weight> w(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    w[i] = std::min(pair.freq1(node_id(i)), pair.freq2(node_id(i)));
  }
  return WeightedTree(pair.tree(), std::move(w));
}

namespace detail {

inline std::vector<NodeId> by_weight_desc(const WeightedTree& tree) {
  std::vector<NodeId> order(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = node_id(i);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return tree.weight(a) > tree.weight(b);
  });
  return order;
}

}  // namespace detail

// FEQ: the k heaviest nodes, smaller id first on ties. Result ascending.
inline std::vector<NodeId> feq(const WeightedTree& tree, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k", "must be >= 1");
  auto order = detail::by_weight_desc(tree);
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

// CAGG: heaviest-first, but a node nested with an already chosen node (one is
// an ancestor of the other) is passed over, and zero-weight nodes contribute
// nothing in that pass. If fewer than k nodes survive, the heaviest of the
// remaining nodes fill the budget. Result ascending.
inline std::vector<NodeId> cagg(const WeightedTree& tree, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k", "must be >= 1");
  const Tree& t = tree.tree();
  const auto order = detail::by_weight_desc(tree);
  const std::size_t budget = std::min(k, order.size());
  std::vector<NodeId> chosen;
  std::vector<char> taken(tree.size(), 0);
  for (NodeId x : order) {
    if (chosen.size() == budget) break;
    if (tree.weight(x) == 0) break;
    const bool nested = std::any_of(chosen.begin(), chosen.end(), [&](NodeId c) {
      return t.is_ancestor(c, x) || t.is_ancestor(x, c);
    });
    if (nested) continue;
    chosen.push_back(x);
    taken[x.index()] = 1;
  }
  for (NodeId x : order) {
    if (chosen.size() == budget) break;
    if (taken[x.index()]) continue;
    chosen.push_back(x);
    taken[x.index()] = 1;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

inline constexpr std::size_t kOracleMaxNodes = 16;
inline constexpr std::size_t kOracleMaxBudget = 4;

struct OracleResult {
  SummarySelection selection;
  double score = 0.0;
};

// Enumerates every candidate subset of size <= k and every split of it into
// (s1, s2), scoring each through summary_score. First maximizer in
// enumeration order wins.
inline OracleResult brute_force_opt(const SummaryObjective& obj, std::size_t k,
                                    CandidatePool pool = CandidatePool::kAllNodes) {
  const std::size_t n = obj.pair().size();
  if (n > kOracleMaxNodes || k > kOracleMaxBudget) {
    throw Error(ErrorCode::kTooLargeForOracle, std::to_string(n) + " nodes, k=" + std::to_string(k));
  }
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k", "must be >= 1");
  const auto candidates = candidate_nodes(obj.tree(), pool);
  const std::size_t budget = std::min(k, candidates.size());

  OracleResult best;
  best.selection.k = k;
  best.score = summary_score(obj, best.selection).value;
  std::vector<std::size_t> idx;
  // Subsets in lexicographic order of candidate positions.
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) {
      const std::size_t m = idx.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        SummarySelection sel;
        sel.k = k;
        for (std::size_t j = 0; j < m; ++j) {
          sel.insert(candidates[idx[j]], (mask >> j) & 1 ? Side::kDif : Side::kSim);
        }
        const double v = summary_score(obj, sel).value;
        if (v > best.score) {
          best.score = v;
          best.selection = std::move(sel);
        }
      }
    }
    if (idx.size() == budget) return;
    for (std::size_t i = start; i < candidates.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

inline OracleResult brute_force_opt(const WeightedTreePair& pair, std::size_t k, std::size_t beta,
                                    CandidatePool pool = CandidatePool::kAllNodes) {
  if (pair.size() > kOracleMaxNodes || k > kOracleMaxBudget) {
    throw Error(ErrorCode::kTooLargeForOracle,
                std::to_string(pair.size()) + " nodes, k=" + std::to_string(k));
  }
  const SummaryObjective obj(pair, beta);
  return brute_force_opt(obj, k, pool);
}

}  // namespace treesum

#endif  // TREESUM_BASELINES_HPP_
