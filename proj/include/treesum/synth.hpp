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

#ifndef TREESUM_SYNTH_HPP_
#define TREESUM_SYNTH_HPP_

// Seeded random tree pairs for benchmarks and property tests.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "treesum/tree.hpp"

namespace treesum {

// Both trees draw independently from [lo, hi].
struct UniformWeights {
  Weight lo = 0;
  Weight hi = 1000;
};

// freq1 ~ U[lo, hi]; freq2 = round(rho * freq1 + (1 - rho) * u) with an
// independent u ~ U[lo, hi]. rho = 1 gives identical trees.
struct CorrelatedWeights {
  double rho = 0.5;
  Weight lo = 0;
  Weight hi = 1000;
};

using WeightModel = std::variant<UniformWeights, CorrelatedWeights>;

// Each new node attaches to a uniformly chosen earlier node that still has
// fewer than max_branching children. Labels are "n<id>".
inline WeightedTreePair synth_generate(std::size_t node_count, std::size_t max_branching,
                                       const WeightModel& model, std::uint64_t seed) {
  if (node_count == 0) throw Error(ErrorCode::kInvalidArgument, "nodes", "must be >= 1");
  if (max_branching == 0) throw Error(ErrorCode::kInvalidArgument, "branching", "must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  std::vector<std::optional<NodeId>> parents;
  std::vector<std::size_t> child_count(node_count, 0);
  std::vector<NodeId> open;  // nodes that can still take a child
  labels.reserve(node_count);
  parents.reserve(node_count);
  labels.push_back("n0");
  parents.push_back(std::nullopt);
  open.push_back(node_id(0));
  for (std::size_t i = 1; i < node_count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const std::size_t slot = pick(rng);
    const NodeId p = open[slot];
    labels.push_back("n" + std::to_string(i));
    parents.push_back(p);
    if (++child_count[p.index()] == max_branching) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(node_id(i));
  }

  std::vector<Weight> w1(node_count), w2(node_count);
  if (const auto* u = std::get_if<UniformWeights>(&model)) {
    std::uniform_int_distribution<Weight> draw(u->lo, u->hi);
    for (std::size_t i = 0; i < node_count; ++i) {
      w1[i] = draw(rng);
      w2[i] = draw(rng);
    }
  } else {
    const auto& c = std::get<CorrelatedWeights>(model);
    std::uniform_int_distribution<Weight> draw(c.lo, c.hi);
    for (std::size_t i = 0; i < node_count; ++i) {
      w1[i] = draw(rng);
      const Weight noise = draw(rng);
      w2[i] = static_cast<Weight>(std::llround(c.rho * static_cast<double>(w1[i]) +
                                               (1.0 - c.rho) * static_cast<double>(noise)));
    }
  }
  return WeightedTreePair(Tree::from_parents(std::move(labels), std::move(parents)),
                          std::move(w1), std::move(w2));
}

}  // namespace treesum

#endif  // TREESUM_SYNTH_HPP_
