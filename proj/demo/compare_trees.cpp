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

// Summarizes two small product-category trees and prints the chosen
// representatives followed by the DOT rendering.

#include <iostream>

#include "treesum/treesum.hpp"

int main() {
  using treesum::build_tree;
  // freq1: last year's sales, freq2: this year's.
  const auto pair = build_tree({
      {"store", std::nullopt, 40, 38},
      {"books", "store", 120, 118},
      {"fiction", "books", 300, 310},
      {"comics", "books", 80, 5},
      {"music", "store", 90, 20},
      {"vinyl", "music", 60, 2},
      {"cds", "music", 70, 4},
      {"games", "store", 200, 205},
      {"console", "games", 150, 160},
      {"board", "games", 40, 38},
  });

  const treesum::SummaryObjective objective(pair, 3);
  const auto result = treesum::svdt_greedy(objective, 3);
  for (const auto& step : result.trace.steps) {
    std::cout << pair.tree().label(step.node) << "\t" << treesum::side_name(step.side) << "\tgain "
              << step.gain << "\n";
  }
  std::cout << "score " << result.score << "\n\n";

  std::vector<double> gain(pair.size(), 0.0);
  for (const auto& step : result.trace.steps) gain[step.node.index()] = step.gain;
  std::cout << treesum::emit_summary_graph(result.selection, pair, objective.scores(), gain);
  return 0;
}
