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

#ifndef TREESUM_SCORING_HPP_
#define TREESUM_SCORING_HPP_

// Per-node similarity/difference ratios, the exclusion-based self features
// and selective gains, and the coverage-form summary objective.
//
// The objective covers every node y by its best selected ancestor on each
// side:
//
//   sum(S) = sum_y max_{x in S1 ∩ anc(y)} a_sim(x) * sim_ratio(y) * dis_x(y)
//          + sum_y max_{x in S2 ∩ anc(y)} a_dif(x) * dif_ratio(y) * dis_x(y)
//
// with a_sim(x) = ω(x)(1 - SimDif_D(x)) and a_dif(x) = γ ω(x) SimDif_D(x).
// Each side is a facility-location function, hence monotone submodular.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "treesum/distribution.hpp"
#include "treesum/tree.hpp"

namespace treesum {

enum class Side { kSim, kDif };

constexpr const char* side_name(Side s) { return s == Side::kSim ? "SIM" : "DIF"; }

struct SummarySelection {
  std::vector<NodeId> s1;  // similarity representatives, ascending
  std::vector<NodeId> s2;  // difference representatives, ascending
  std::size_t k = 0;

  std::size_t size() const noexcept { return s1.size() + s2.size(); }
  const std::vector<NodeId>& side(Side s) const { return s == Side::kSim ? s1 : s2; }
  std::vector<NodeId>& side(Side s) { return s == Side::kSim ? s1 : s2; }

  bool contains(NodeId x) const {
    return std::binary_search(s1.begin(), s1.end(), x) ||
           std::binary_search(s2.begin(), s2.end(), x);
  }

  // s1 ∪ s2, ascending.
  std::vector<NodeId> all() const {
    std::vector<NodeId> out;
    std::merge(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(out));
    return out;
  }

  void insert(NodeId x, Side s) {
    auto& v = side(s);
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  }

  friend bool operator==(const SummarySelection&, const SummarySelection&) = default;
};

inline void validate_selection(const SummarySelection& sel, std::size_t node_count) {
  auto check = [&](const std::vector<NodeId>& v) {
    if (!std::is_sorted(v.begin(), v.end()) ||
        std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw Error(ErrorCode::kInvalidArgument, "selection", "side not strictly ascending");
    }
    for (NodeId x : v) {
      if (x.index() >= node_count) throw Error(ErrorCode::kInvalidArgument, "selection", "node out of range");
    }
  };
  check(sel.s1);
  check(sel.s2);
  for (NodeId x : sel.s1) {
    if (std::binary_search(sel.s2.begin(), sel.s2.end(), x)) {
      throw Error(ErrorCode::kInvalidArgument, "selection", "s1 and s2 overlap");
    }
  }
}

// min/max and |f1-f2|/max; an all-zero node counts as perfectly similar.
inline double sim_ratio(const WeightedTreePair& pair, NodeId y) {
  const Weight hi = differential_weight(pair, y);
  if (hi == 0) return 1.0;
  return static_cast<double>(std::min(pair.freq1(y), pair.freq2(y))) / static_cast<double>(hi);
}

inline double dif_ratio(const WeightedTreePair& pair, NodeId y) {
  const Weight hi = differential_weight(pair, y);
  if (hi == 0) return 0.0;
  const Weight lo = std::min(pair.freq1(y), pair.freq2(y));
  return static_cast<double>(hi - lo) / static_cast<double>(hi);
}

namespace detail {

inline std::vector<char> covered_by(const Tree& tree, std::span<const NodeId> reps) {
  std::vector<char> covered(tree.size(), 0);
  for (NodeId z : reps) {
    for (NodeId y : tree.subtree(z)) covered[y.index()] = 1;
  }
  return covered;
}

template <typename Ratio>
double excluded_sum(const WeightedTreePair& pair, NodeId x,
                    std::span<const NodeId> reps, Ratio ratio) {
  const Tree& tree = pair.tree();
  const auto covered = covered_by(tree, reps);
  double acc = 0.0;
  for (NodeId y : tree.subtree(x)) {
    if (covered[y.index()]) continue;
    acc += ratio(pair, y) * level_distance(tree, x, y);
  }
  return acc;
}

}  // namespace detail

// sim(x): level-discounted similarity of the part of des(x) not already
// below a member of s1.
inline double self_sim(const WeightedTreePair& pair, NodeId x, std::span<const NodeId> s1) {
  return detail::excluded_sum(pair, x, s1, sim_ratio);
}

inline double self_dif(const WeightedTreePair& pair, NodeId x, std::span<const NodeId> s2,
                       double gamma) {
  return gamma * detail::excluded_sum(pair, x, s2, dif_ratio);
}

inline double gain_sim(const WeightedTreePair& pair, NodeId x, std::span<const NodeId> s1,
                       std::span<const double> scores) {
  return static_cast<double>(differential_weight(pair, x)) * (1.0 - scores[x.index()]) *
         self_sim(pair, x, s1);
}

inline double gain_dif(const WeightedTreePair& pair, NodeId x, std::span<const NodeId> s2,
                       std::span<const double> scores, double gamma) {
  return static_cast<double>(differential_weight(pair, x)) * scores[x.index()] *
         self_dif(pair, x, s2, gamma);
}

// Everything the objective needs, precomputed per node.
class SummaryObjective {
 public:
  SummaryObjective(const WeightedTreePair& pair, std::vector<double> scores, double gamma)
      : pair_(&pair), scores_(std::move(scores)), gamma_(gamma) {
    const std::size_t n = pair.size();
    if (scores_.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "scores", "size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const NodeId x = node_id(i);
      const double omega = static_cast<double>(differential_weight(pair, x));
      rep_weight_[0].push_back(omega * (1.0 - scores_[i]));
      rep_weight_[1].push_back(gamma_ * omega * scores_[i]);
      ratio_[0].push_back(sim_ratio(pair, x));
      ratio_[1].push_back(dif_ratio(pair, x));
    }
  }

  // Computes SimDif_D scores with the given beta and γ from the data.
  SummaryObjective(const WeightedTreePair& pair, std::size_t beta)
      : SummaryObjective(pair, all_scores(pair, beta), scaling_coefficient(pair)) {}

  const WeightedTreePair& pair() const noexcept { return *pair_; }
  const Tree& tree() const noexcept { return pair_->tree(); }
  std::span<const double> scores() const noexcept { return scores_; }
  double gamma() const noexcept { return gamma_; }

  double rep_weight(Side s, NodeId x) const { return rep_weight_[slot(s)][x.index()]; }
  double ratio(Side s, NodeId y) const { return ratio_[slot(s)][y.index()]; }

  // Value y receives from representative x on side s; x must be in anc(y).
  double contribution(Side s, NodeId x, NodeId y) const {
    const Tree& t = tree();
    return rep_weight(s, x) * ratio(s, y) /
           static_cast<double>(t.level(y) - t.level(x) + 1);
  }

 private:
  static constexpr std::size_t slot(Side s) { return s == Side::kSim ? 0 : 1; }

  const WeightedTreePair* pair_;
  std::vector<double> scores_;
  double gamma_;
  std::vector<double> rep_weight_[2];
  std::vector<double> ratio_[2];
};

struct Coverage {
  NodeId rep;
  double value = 0.0;

  friend bool operator==(const Coverage&, const Coverage&) = default;
};

// Best selected ancestor per side for every node (nullopt when none).
struct CoverageAssignment {
  std::vector<std::optional<Coverage>> sim;
  std::vector<std::optional<Coverage>> dif;

  const std::vector<std::optional<Coverage>>& side(Side s) const {
    return s == Side::kSim ? sim : dif;
  }
};

struct ScoreResult {
  double value = 0.0;
  double sim_value = 0.0;
  double dif_value = 0.0;
  CoverageAssignment coverage;
};

namespace detail {

// Ties go to the deeper ancestor.
inline std::vector<std::optional<Coverage>> assign_side(const SummaryObjective& obj, Side s,
                                                        std::span<const NodeId> reps) {
  const Tree& tree = obj.tree();
  std::vector<std::optional<Coverage>> best(tree.size());
  for (NodeId x : reps) {
    for (NodeId y : tree.subtree(x)) {
      const double v = obj.contribution(s, x, y);
      auto& cur = best[y.index()];
      if (!cur || v > cur->value ||
          (v == cur->value && tree.level(x) > tree.level(cur->rep))) {
        cur = Coverage{x, v};
      }
    }
  }
  return best;
}

inline double side_total(const std::vector<std::optional<Coverage>>& cov) {
  double acc = 0.0;
  for (const auto& c : cov) {
    if (c) acc += c->value;
  }
  return acc;
}

}  // namespace detail

inline ScoreResult summary_score(const SummaryObjective& obj, const SummarySelection& sel) {
  validate_selection(sel, obj.pair().size());
  ScoreResult r;
  r.coverage.sim = detail::assign_side(obj, Side::kSim, sel.s1);
  r.coverage.dif = detail::assign_side(obj, Side::kDif, sel.s2);
  r.sim_value = detail::side_total(r.coverage.sim);
  r.dif_value = detail::side_total(r.coverage.dif);
  r.value = r.sim_value + r.dif_value;
  return r;
}

inline ScoreResult summary_score(const SummarySelection& sel, const WeightedTreePair& pair,
                                 std::span<const double> scores, double gamma) {
  const SummaryObjective obj(pair, std::vector<double>(scores.begin(), scores.end()), gamma);
  return summary_score(obj, sel);
}

// Δsum(x | S) when x joins side s.
inline double marginal_gain(const SummaryObjective& obj, NodeId x,
                            const SummarySelection& sel, Side s) {
  if (sel.contains(x)) throw Error(ErrorCode::kAlreadySelected, obj.tree().label(x));
  SummarySelection grown = sel;
  grown.insert(x, s);
  return summary_score(obj, grown).value - summary_score(obj, sel).value;
}

// Incremental view of one side of the objective: tracks the best value each
// node currently receives, so a candidate's marginal gain costs |des(x)|.
class CoverageState {
 public:
  // Per-node data is laid out in preorder so a subtree is one contiguous run.
  CoverageState(const SummaryObjective& obj, Side side)
      : obj_(&obj), side_(side) {
    const Tree& t = obj.tree();
    const auto order = t.preorder();
    ratio_.reserve(order.size());
    level_.reserve(order.size());
    for (NodeId y : order) {
      ratio_.push_back(obj.ratio(side, y));
      level_.push_back(static_cast<double>(t.level(y)));
    }
    best_.assign(order.size(), 0.0);
  }

  double gain(NodeId x) const {
    const auto [first, last, w, base] = span_of(x);
    double acc = 0.0;
    for (std::size_t i = first; i < last; ++i) {
      const double improvement = w * ratio_[i] / (level_[i] - base) - best_[i];
      if (improvement > 0.0) acc += improvement;
    }
    return acc;
  }

  void add(NodeId x) {
    const auto [first, last, w, base] = span_of(x);
    for (std::size_t i = first; i < last; ++i) {
      best_[i] = std::max(best_[i], w * ratio_[i] / (level_[i] - base));
    }
  }

  Side side() const noexcept { return side_; }

 private:
  struct Span {
    std::size_t first, last;
    double weight, base;
  };

  Span span_of(NodeId x) const {
    const Tree& t = obj_->tree();
    const std::size_t first = t.preorder_index(x);
    // level(y) - level(x) + 1 == level(y) - (level(x) - 1)
    return {first, first + t.subtree_size(x), obj_->rep_weight(side_, x),
            static_cast<double>(t.level(x)) - 1.0};
  }

  const SummaryObjective* obj_;
  Side side_;
  std::vector<double> ratio_;
  std::vector<double> level_;
  std::vector<double> best_;
};

}  // namespace treesum

#endif  // TREESUM_SCORING_HPP_
