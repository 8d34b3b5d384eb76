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

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "treesum/tree.hpp"

namespace treesum {
namespace {

using testing::find;
using testing::fixture_f1;

TEST(BuildTree, SingleNode) {
  const auto p = build_tree({{"r", std::nullopt, 10, 10}});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.tree().level(p.tree().root()), 0u);
  EXPECT_TRUE(p.tree().is_leaf(p.tree().root()));
}

TEST(BuildTree, FixtureLevelsAndChildOrder) {
  const auto p = fixture_f1();
  const Tree& t = p.tree();
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.level(find(t, "r")), 0u);
  EXPECT_EQ(t.level(find(t, "a")), 1u);
  EXPECT_EQ(t.level(find(t, "b")), 1u);
  const auto kids = t.children(t.root());
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(t.label(kids[0]), "a");
  EXPECT_EQ(t.label(kids[1]), "b");
}

TEST(BuildTree, ParentMayAppearAfterChild) {
  const auto p = build_tree({{"a", "r", 1, 1}, {"r", std::nullopt, 1, 1}});
  EXPECT_EQ(p.tree().label(p.tree().root()), "r");
  EXPECT_EQ(p.tree().level(find(p.tree(), "a")), 1u);
}

void expect_error(std::initializer_list<NodeSpec> nodes, ErrorCode code, const std::string& subject) {
  try {
    build_tree(nodes);
    FAIL() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    EXPECT_EQ(e.subject(), subject);
  }
}

TEST(BuildTree, Errors) {
  expect_error({{"r", std::nullopt, 1, 1}, {"a", "x", 2, 2}}, ErrorCode::kUnknownParent, "x");
  expect_error({{"r", std::nullopt, 1, 1}, {"s", std::nullopt, 1, 1}}, ErrorCode::kMultipleRoots, "s");
  expect_error({{"r", std::nullopt, 1, 1}, {"a", "b", 1, 1}, {"b", "a", 1, 1}},
               ErrorCode::kCycleDetected, "a");
  expect_error({{"r", std::nullopt, 1, 1}, {"a", "r", -1, 1}}, ErrorCode::kNegativeWeight, "a");
  expect_error({{"r", std::nullopt, 1, 1}, {"r", "r", 1, 1}}, ErrorCode::kDuplicateLabel, "r");
  EXPECT_THROW(build_tree(std::span<const NodeSpec>{}), Error);
}

TEST(BuildTree, NoRootIsACycle) {
  expect_error({{"a", "b", 1, 1}, {"b", "a", 1, 1}}, ErrorCode::kCycleDetected, "a");
}

TEST(AncestorsDescendants, Fixture) {
  const auto p = fixture_f1();
  const Tree& t = p.tree();
  const NodeId r = find(t, "r"), a = find(t, "a"), b = find(t, "b");
  EXPECT_EQ(t.descendants(r), (std::vector<NodeId>{r, a, b}));
  EXPECT_EQ(t.ancestors(a), (std::vector<NodeId>{r, a}));
  EXPECT_EQ(t.descendants(a), (std::vector<NodeId>{a}));
  EXPECT_EQ(t.ancestors(r), (std::vector<NodeId>{r}));
}

TEST(LevelDistance, Values) {
  const auto p = build_tree({{"r", std::nullopt, 1, 1}, {"c", "r", 1, 1}, {"g", "c", 1, 1}, {"s", "r", 1, 1}});
  const Tree& t = p.tree();
  EXPECT_DOUBLE_EQ(level_distance(t, find(t, "c"), find(t, "c")), 1.0);
  EXPECT_DOUBLE_EQ(level_distance(t, find(t, "r"), find(t, "g")), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(level_distance(t, find(t, "s"), find(t, "g")), 0.0);
  EXPECT_DOUBLE_EQ(level_distance(t, find(t, "g"), find(t, "r")), 0.0);
}

TEST(DifferentialWeight, Max) {
  const auto p = build_tree({{"r", std::nullopt, 100, 0}, {"a", "r", 5, 5}, {"b", "r", 0, 0}});
  EXPECT_EQ(differential_weight(p, find(p.tree(), "r")), 100u);
  EXPECT_EQ(differential_weight(p, find(p.tree(), "a")), 5u);
  EXPECT_EQ(differential_weight(p, find(p.tree(), "b")), 0u);
}

TEST(ScalingCoefficient, Examples) {
  EXPECT_NEAR(scaling_coefficient(build_tree({{"r", std::nullopt, 1, 4}, {"a", "r", 6, 2}})),
              5.0 / 12.0, 1e-12);
  EXPECT_DOUBLE_EQ(scaling_coefficient(fixture_f1()), 4.5);
  EXPECT_DOUBLE_EQ(scaling_coefficient(build_tree({{"r", std::nullopt, 3, 3}, {"a", "r", 0, 0}})), 1.0);
}

TEST(ScalingCoefficient, EqualWeightNodesDoNotMoveGamma) {
  const auto base = fixture_f1();
  const auto grown = build_tree({{"r", std::nullopt, 10, 10},
                                 {"a", "r", 100, 0},
                                 {"b", "r", 50, 45},
                                 {"c", "b", 7, 7},
                                 {"d", "a", 0, 0}});
  EXPECT_DOUBLE_EQ(scaling_coefficient(base), scaling_coefficient(grown));
}

// Exhaustive structural checks against parent-chain walks.
TEST(TreeProperties, RandomTreesAgreeWithParentWalks) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 200);
    const auto p = testing::random_pair(rng, size(rng));
    const Tree& t = p.tree();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const NodeId x = node_id(i);
      EXPECT_EQ(t.level(x), testing::depth_by_walk(t, x));
      if (auto par = t.parent(x)) { EXPECT_EQ(t.level(x), t.level(*par) + 1); }
      for (std::size_t j = 0; j < t.size(); ++j) {
        const NodeId y = node_id(j);
        const bool walk = testing::ancestor_by_walk(t, x, y);
        ASSERT_EQ(t.is_ancestor(x, y), walk);
        const double d = level_distance(t, x, y);
        if (walk) {
          EXPECT_DOUBLE_EQ(d, 1.0 / (t.level(y) - t.level(x) + 1.0));
          EXPECT_GT(d, 0.0);
          EXPECT_LE(d, 1.0);
        } else {
          EXPECT_EQ(d, 0.0);
        }
      }
      for (NodeId y : t.descendants(x)) {
        const auto anc = t.ancestors(y);
        EXPECT_TRUE(std::binary_search(anc.begin(), anc.end(), x));
      }
    }
    EXPECT_EQ(t.descendants(t.root()).size(), t.size());
  }
}

TEST(TreeDistance, LcaHops) {
  const auto p = build_tree({{"r", std::nullopt, 1, 1}, {"a", "r", 1, 1}, {"b", "a", 1, 1}, {"c", "r", 1, 1}});
  const Tree& t = p.tree();
  EXPECT_EQ(t.distance(find(t, "b"), find(t, "c")), 3u);
  EXPECT_EQ(t.distance(find(t, "b"), find(t, "r")), 2u);
  EXPECT_EQ(t.distance(find(t, "a"), find(t, "a")), 0u);
}

}  // namespace
}  // namespace treesum
