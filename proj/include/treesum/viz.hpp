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

#ifndef TREESUM_VIZ_HPP_
#define TREESUM_VIZ_HPP_

// Compact DOT rendering of a summary.
//
// Step 1 keeps only selected nodes and their ancestors. Step 2 removes every
// unselected node that sits below a selected node; each selected node then
// hangs off its nearest rendered ancestor, with a dashed edge when nodes were
// skipped. Similarity representatives are red, difference representatives
// blue, four shades per side by gain quartile (darker = larger gain).

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treesum/io.hpp"
#include "treesum/scoring.hpp"

namespace treesum {

inline constexpr std::array<const char*, 4> kSimShades = {"#fcbba1", "#fb6a4a", "#de2d26", "#a50f15"};
inline constexpr std::array<const char*, 4> kDifShades = {"#c6dbef", "#6baed6", "#3182bd", "#08519c"};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

// Shade index per node of one side from its gain rank: the largest gain is
// always darkest (3); equal gains share a shade.
inline std::vector<std::size_t> shade_ranks(std::span<const NodeId> nodes,
                                            std::span<const double> gain) {
  auto g = [&](NodeId x) { return x.index() < gain.size() ? gain[x.index()] : 0.0; };
  const std::size_t m = nodes.size();
  std::vector<std::size_t> shade(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t larger = 0;
    for (NodeId y : nodes) larger += g(y) > g(nodes[i]) ? 1 : 0;
    shade[i] = 3 - (larger * 4) / m;
  }
  return shade;
}

}  // namespace detail

inline std::string emit_summary_graph(const SummarySelection& sel, const WeightedTreePair& pair,
                                      std::span<const double> scores,
                                      std::span<const double> gain) {
  const Tree& tree = pair.tree();
  const std::size_t n = tree.size();
  const auto selected = sel.all();
  if (selected.empty()) throw Error(ErrorCode::kEmptySelection, "");
  validate_selection(sel, n);

  std::vector<char> is_sel(n, 0);
  for (NodeId x : selected) is_sel[x.index()] = 1;

  // Step 1: keep ancestors of selected nodes.
  std::vector<char> keep(n, 0);
  for (NodeId x : selected) {
    for (std::optional<NodeId> cur = x; cur && !keep[cur->index()]; cur = tree.parent(*cur)) {
      keep[cur->index()] = 1;
    }
  }
  // Step 2: drop unselected nodes that have a selected proper ancestor.
  std::vector<char> under_sel(n, 0);
  for (NodeId y : tree.preorder()) {
    if (auto p = tree.parent(y)) under_sel[y.index()] = under_sel[p->index()] || is_sel[p->index()];
  }
  std::vector<char> render(n, 0);
  for (std::size_t i = 0; i < n; ++i) render[i] = keep[i] && (is_sel[i] || !under_sel[i]);

  std::vector<std::size_t> shade(n, 0);
  for (Side s : {Side::kSim, Side::kDif}) {
    const auto& nodes = sel.side(s);
    const auto ranks = detail::shade_ranks(nodes, gain);
    for (std::size_t i = 0; i < nodes.size(); ++i) shade[nodes[i].index()] = ranks[i];
  }

  std::string out;
  out += "digraph summary {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=ellipse, style=filled, fontname=\"Helvetica\"];\n";
  for (NodeId x : tree.preorder()) {
    if (!render[x.index()]) continue;
    const std::string id = "n" + std::to_string(x.value);
    out += "  " + id + " [label=\"" + detail::dot_escape(tree.label(x)) + "\"";
    if (is_sel[x.index()]) {
      const bool sim = std::binary_search(sel.s1.begin(), sel.s1.end(), x);
      const std::size_t sh = shade[x.index()];
      out += std::string(", fillcolor=\"") + (sim ? kSimShades[sh] : kDifShades[sh]) + "\"";
      if (sh >= 2) out += ", fontcolor=\"white\"";
      const double g = x.index() < gain.size() ? gain[x.index()] : 0.0;
      out += std::string(", tooltip=\"") + (sim ? "SIM" : "DIF") + " gain=" + format_double(g) +
             " simdif=" + format_double(scores[x.index()]) + "\"";
    } else {
      out += ", fillcolor=\"white\", color=\"gray50\"";
    }
    out += "];\n";
  }
  for (NodeId x : tree.preorder()) {
    if (!render[x.index()] || x == tree.root()) continue;
    std::vector<std::string> skipped;
    NodeId up = *tree.parent(x);
    while (!render[up.index()]) {
      skipped.push_back(tree.label(up));
      up = *tree.parent(up);
    }
    out += "  n" + std::to_string(up.value) + " -> n" + std::to_string(x.value);
    if (!skipped.empty()) {
      std::string chain;
      for (auto it = skipped.rbegin(); it != skipped.rend(); ++it) {
        if (!chain.empty()) chain += ", ";
        chain += *it;
      }
      out += " [style=dashed, tooltip=\"" + detail::dot_escape(chain) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace treesum

#endif  // TREESUM_VIZ_HPP_
