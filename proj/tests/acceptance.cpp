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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "test_support.hpp"
#include "treesum/treesum.hpp"

namespace treesum {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Pass-up and score on the three-node fixture.
Outcome worked_example() {
  const auto start = Clock::now();
  Outcome o;
  const auto p = testing::fixture_f1();
  const auto dist = pass_up(p, 1);
  const auto& root = dist[p.tree().root().index()];
  const bool exact = root.sim_vector() == std::vector<Weight>{50, 45} &&
                     root.dif_vector() == std::vector<Weight>{100, 0};
  const double score = all_scores(p, 1)[p.tree().root().index()];
  const double oracle = testing::hellinger_oracle({50, 45}, {100, 0});
  const double secs = seconds_since(start);
  o.pass = exact && std::fabs(score - 0.52395) <= 1e-4 && std::fabs(score - oracle) <= 1e-4 && secs < 1.0;
  std::ostringstream ss;
  ss << "Sim_D(r)=[" << root.sim_vector()[0] << "," << root.sim_vector()[1] << "] Dif_D(r)=["
     << root.dif_vector()[0] << "," << root.dif_vector()[1] << "] SimDif_D(r)=" << score
     << " oracle=" << oracle << " time=" << secs << "s";
  o.detail = ss.str();
  return o;
}

Outcome hellinger_bounds() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len_pick(1, 8);
  std::uniform_int_distribution<Weight> w(0, 1000);
  std::size_t violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = 2 * len_pick(rng);
    std::vector<Weight> a(len), b(len);
    for (auto& v : a) v = w(rng);
    for (auto& v : b) v = w(rng);
    a[0] += 1;
    b[0] += 1;
    const double s = simdif_score(a, b);
    if (!(s >= 0.0 && s <= 1.0)) ++violations;
    if (std::fabs(simdif_score(a, a)) > 1e-12) ++violations;
    // Disjoint supports: a on even coordinates, b on odd ones.
    std::vector<Weight> even(len, 0), odd(len, 0);
    for (std::size_t i = 0; i < len; i += 2) even[i] = a[i] + 1;
    for (std::size_t i = 1; i < len; i += 2) odd[i] = b[i] + 1;
    if (std::fabs(simdif_score(even, odd) - 1.0) > 1e-12) ++violations;
  }
  const double secs = seconds_since(start);
  return {violations == 0 && secs < 5.0,
          "10000 pairs, violations=" + std::to_string(violations) + " time=" + std::to_string(secs) + "s"};
}

Outcome approximation() {
  const auto start = Clock::now();
  const double factor = 1.0 - 1.0 / std::exp(1.0);
  std::mt19937_64 rng(7);
  std::size_t violations = 0;
  double worst = INFINITY;
  const int instances = 150;
  for (int trial = 0; trial < instances; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const auto p = testing::random_pair(rng, size(rng));
    const SummaryObjective obj(p, 1 + trial % 2);
    const std::size_t k = 1 + trial % 3;
    const double greedy = svdt_greedy(obj, k).score;
    const double opt = brute_force_opt(obj, k).score;
    if (opt > 0) worst = std::min(worst, greedy / opt);
    if (greedy < factor * opt - 1e-12) ++violations;
  }
  const double secs = seconds_since(start);
  std::ostringstream ss;
  ss << instances << " instances, violations=" << violations << " worst ratio=" << worst
     << " (bound " << factor << ") time=" << secs << "s";
  return {violations == 0 && secs < 60.0, ss.str()};
}

Outcome submodularity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(13);
  std::size_t samples = 0, violations = 0, monotone_violations = 0;
  while (samples < 1500) {
    std::uniform_int_distribution<std::size_t> size(2, 15);
    const auto p = testing::random_pair(rng, size(rng));
    const SummaryObjective obj(p, 1 + samples % 3);
    // Random side-respecting chain S_0 ⊆ S_1 ⊆ ... built one node at a time.
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    const NodeId x = node_id(order.back());
    order.pop_back();
    std::vector<SummarySelection> chain(1);
    for (std::size_t i : order) {
      SummarySelection next = chain.back();
      next.insert(node_id(i), rng() % 2 ? Side::kSim : Side::kDif);
      chain.push_back(std::move(next));
    }
    std::vector<double> value;
    for (const auto& s : chain) value.push_back(summary_score(obj, s).value);
    for (std::size_t i = 1; i < value.size(); ++i) {
      if (value[i] < value[i - 1] - 1e-9) ++monotone_violations;
    }
    std::uniform_int_distribution<std::size_t> pick(0, chain.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    if (a > b) std::swap(a, b);
    for (Side side : {Side::kSim, Side::kDif}) {
      auto grow = [&](const SummarySelection& s) {
        SummarySelection g = s;
        g.insert(x, side);
        return summary_score(obj, g).value - summary_score(obj, s).value;
      };
      if (grow(chain[a]) < grow(chain[b]) - 1e-9) ++violations;
      ++samples;
    }
  }
  const double secs = seconds_since(start);
  std::ostringstream ss;
  ss << samples << " samples, submodularity violations=" << violations
     << " monotonicity violations=" << monotone_violations << " time=" << secs << "s";
  return {violations == 0 && monotone_violations == 0 && secs < 60.0, ss.str()};
}

Outcome lazy_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(19);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 200);
    const auto p = testing::random_pair(rng, size(rng), 30);
    const SummaryObjective obj(p, 1 + trial % 3);
    const std::size_t k = 1 + trial % 15;
    const auto lazy = svdt_greedy(obj, k);
    const auto naive = testing::naive_greedy(obj, k);
    if (!(lazy.selection == naive.selection) || std::fabs(lazy.score - naive.score) > 1e-9) ++mismatches;
  }
  const double secs = seconds_since(start);
  return {mismatches == 0 && secs < 60.0,
          "50 trees, mismatches=" + std::to_string(mismatches) + " time=" + std::to_string(secs) + "s"};
}

// Fastest of several runs, to damp scheduler noise on short timings.
double fastest_run(const WeightedTreePair& p, int reps) {
  double best = INFINITY;
  for (int rep = 0; rep < reps; ++rep) {
    const auto start = Clock::now();
    const auto res = svdt_greedy(p, 10, 3);
    best = std::min(best, seconds_since(start));
    if (res.selection.size() == 0) return INFINITY;
  }
  return best;
}

Outcome scalability() {
  const auto start = Clock::now();
  const auto small = synth_generate(10000, 8, UniformWeights{0, 1000}, 7);
  const auto large = synth_generate(100000, 8, UniformWeights{0, 1000}, 7);
  const double t_small = fastest_run(small, 25);
  const double t_large = fastest_run(large, 7);
  const double ratio = t_large / t_small;
  const double secs = seconds_since(start);
  std::ostringstream ss;
  ss << "k=10 beta=3: 1e4 nodes " << t_small << "s, 1e5 nodes " << t_large << "s, ratio=" << ratio
     << " total=" << secs << "s";
  return {ratio <= 20.0 && secs < 120.0, ss.str()};
}

// Identical weights everywhere except a few subtrees where the second tree
// lost most of its mass.
WeightedTreePair hotspot_pair(std::uint64_t seed) {
  const auto base = synth_generate(2000, 6, CorrelatedWeights{1.0, 1, 100}, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Weight> w1(base.freq1().begin(), base.freq1().end());
  std::vector<Weight> w2(base.freq2().begin(), base.freq2().end());
  const Tree& t = base.tree();
  std::uniform_int_distribution<std::size_t> pick(1, t.size() - 1);
  int hot = 0;
  for (int attempt = 0; attempt < 10000 && hot < 3; ++attempt) {
    const NodeId x = node_id(pick(rng));
    const std::size_t size = t.subtree_size(x);
    if (size < 10 || size > 300) continue;
    for (NodeId y : t.subtree(x)) w2[y.index()] = w1[y.index()] / 10;
    ++hot;
  }
  return base.with_weights(std::move(w1), std::move(w2));
}

Outcome metric_trend() {
  const auto start = Clock::now();
  std::string detail;
  bool pass = true;
  for (std::size_t k : {5u, 10u}) {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto p = hotspot_pair(seed);
      const auto svdt = svdt_greedy(p, k, 50).selection.all();
      const auto base = feq(common_tree(p), k);
      if (diversity(p, svdt) >= diversity(p, base)) ++wins;
    }
    pass = pass && wins >= 45;
    detail += "k=" + std::to_string(k) + ": SVDT>=FEQ in " + std::to_string(wins) + "/50; ";
  }
  detail += "time=" + std::to_string(seconds_since(start)) + "s";
  return {pass, detail};
}

std::string run_cli_capture(std::vector<std::string> args) {
  args.insert(args.begin(), "treesum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return "error: " + err.str();
  return out.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "treesum_acceptance";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "tree.json").string();

  bool round_trip = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = synth_generate(500, 5, CorrelatedWeights{0.6, 0, 200}, seed);
    const std::string saved = dump(to_json(p));
    write_file(path, saved);
    round_trip = round_trip && dump(to_json(load_tree_pair({path}))) == saved;
  }

  const std::string viz1 = run_cli_capture({"viz", "--input", path, "--k", "10", "--beta", "5"});
  const std::string viz2 = run_cli_capture({"viz", "--input", path, "--k", "10", "--beta", "5"});
  const bool viz_same = viz1 == viz2 && viz1.rfind("digraph", 0) == 0;

  const std::string m1 = run_cli_capture({"metrics", "--input", path, "--seed", "42", "--beta", "5"});
  const std::string m2 = run_cli_capture({"metrics", "--input", path, "--seed", "42", "--beta", "5"});
  const auto pair = load_tree_pair({path});
  const auto sel = svdt_greedy(pair, 10, 5).selection.all();
  const bool metrics_same = m1 == m2 && m1 == metrics_text(evaluate(pair, sel, 42)) &&
                            evaluate(pair, sel, 42) == evaluate(pair, sel, 42);
  return {round_trip && viz_same && metrics_same,
          std::string("round-trip=") + (round_trip ? "ok" : "FAIL") + " viz=" + (viz_same ? "ok" : "FAIL") +
              " metrics=" + (metrics_same ? "ok" : "FAIL")};
}

}  // namespace
}  // namespace treesum

int main() {
  using treesum::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 worked-example pipeline", treesum::worked_example},
      {"AC2 Hellinger bounds", treesum::hellinger_bounds},
      {"AC3 (1-1/e) approximation", treesum::approximation},
      {"AC4 submodularity and monotonicity", treesum::submodularity},
      {"AC5 lazy greedy equals naive greedy", treesum::lazy_equivalence},
      {"AC6 scalability shape", treesum::scalability},
      {"AC7 diversity vs FEQ", treesum::metric_trend},
      {"AC8 determinism and round-trip", treesum::determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
