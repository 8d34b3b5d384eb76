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

#ifndef TREESUM_TOOLS_CLI_HPP_
#define TREESUM_TOOLS_CLI_HPP_

// Command-line front end. Every subcommand loads inputs, calls one library
// entry point and serializes the result.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treesum/treesum.hpp"

namespace treesum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct Options {
  std::vector<std::string> input;
  std::string output = "-";
  std::string format;
  std::size_t k = 10;
  std::size_t beta = 50;
  std::uint64_t seed = 0;
  std::size_t queries = kDefaultQueryCount;
  std::string preset;
  bool non_leaf_only = false;
  std::string algo;
  std::string select;
  std::string mode = "zero-fill";
  std::size_t nodes = 1000;
  std::size_t branching = 8;
  std::string model = "uniform";
  Weight lo = 0;
  Weight hi = 1000;
  double rho = 0.5;
};

inline CandidatePool pool_of(const Options& o) {
  return o.non_leaf_only ? CandidatePool::kNonLeaf : CandidatePool::kAllNodes;
}

// score(S) - score(S without x) for every selected x.
inline std::vector<double> leave_one_out_gain(const SummaryObjective& obj,
                                              const SummarySelection& sel) {
  std::vector<double> gain(obj.pair().size(), 0.0);
  const double full = summary_score(obj, sel).value;
  for (Side s : {Side::kSim, Side::kDif}) {
    for (NodeId x : sel.side(s)) {
      SummarySelection rest = sel;
      auto& v = rest.side(s);
      v.erase(std::find(v.begin(), v.end(), x));
      gain[x.index()] = full - summary_score(obj, rest).value;
    }
  }
  return gain;
}

inline std::vector<double> trace_gain(const GreedyTrace& trace, std::size_t n) {
  std::vector<double> gain(n, 0.0);
  for (const auto& step : trace.steps) gain[step.node.index()] = step.gain;
  return gain;
}

inline std::string summary_text(const SummaryDocument& doc) {
  std::string out;
  for (const auto& s : doc.selected) {
    out += std::to_string(s.node.value) + "\t" + s.label + "\t" + side_name(s.side) + "\t" +
           format_double(s.gain) + "\t" + format_double(s.simdif) + "\n";
  }
  out += "summary_score\t" + format_double(doc.summary_score) + "\n";
  if (doc.metrics) out += metrics_text(*doc.metrics);
  return out;
}

inline std::string render_summary(const SummaryDocument& doc, const std::string& format) {
  if (format == "text") return summary_text(doc);
  return dump(to_json(doc));
}

// The SVDT summary document exactly as `summarize` emits it.
inline SummaryDocument summarize_document(const WeightedTreePair& pair, const Options& o) {
  const SummaryObjective obj(pair, o.beta);
  const SvdtResult res = svdt_greedy(obj, o.k, pool_of(o));
  SummaryDocument doc = make_summary_document("svdt", obj, res.selection,
                                              trace_gain(res.trace, pair.size()), o.beta);
  doc.truncated = res.trace.truncated;
  if (res.selection.size() > 0) doc.metrics = evaluate(pair, res.selection.all(), o.seed, o.queries);
  return doc;
}

inline SummaryDocument split_document(const WeightedTreePair& pair, const Options& o) {
  const SummaryObjective obj(pair, o.beta);
  const SplitResult res = optimize_k_split(obj, o.k, pool_of(o));
  SummaryDocument doc = make_summary_document("split-opt", obj, res.selection,
                                              leave_one_out_gain(obj, res.selection), o.beta);
  if (res.selection.size() > 0) doc.metrics = evaluate(pair, res.selection.all(), o.seed, o.queries);
  return doc;
}

inline SummaryDocument oracle_document(const WeightedTreePair& pair, const Options& o) {
  if (pair.size() > kOracleMaxNodes || o.k > kOracleMaxBudget) {
    throw Error(ErrorCode::kTooLargeForOracle,
                std::to_string(pair.size()) + " nodes, k=" + std::to_string(o.k));
  }
  const SummaryObjective obj(pair, o.beta);
  const OracleResult res = brute_force_opt(obj, o.k, pool_of(o));
  SummaryDocument doc = make_summary_document("oracle", obj, res.selection,
                                              leave_one_out_gain(obj, res.selection), o.beta);
  if (res.selection.size() > 0) doc.metrics = evaluate(pair, res.selection.all(), o.seed, o.queries);
  return doc;
}

inline std::vector<NodeId> select_by_labels(const Tree& tree, const std::string& list) {
  std::vector<NodeId> out;
  std::stringstream ss(list);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (label.empty()) continue;
    bool found = false;
    for (std::size_t i = 0; i < tree.size(); ++i) {
      if (tree.label(node_id(i)) == label) {
        out.push_back(node_id(i));
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::kParseError, label, "--select label not in tree");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string baseline_output(const WeightedTreePair& pair, const Options& o) {
  const WeightedTree common = common_tree(pair);
  const auto chosen = o.algo == "cagg" ? cagg(common, o.k) : feq(common, o.k);
  Json j = Json::object();
  j["algorithm"] = o.algo;
  j["k"] = o.k;
  Json sel = Json::array();
  for (NodeId x : chosen) {
    Json e = Json::object();
    e["node"] = x.value;
    e["label"] = pair.tree().label(x);
    e["weight"] = common.weight(x);
    sel.push_back(std::move(e));
  }
  j["selected"] = std::move(sel);
  j["metrics"] = to_json(evaluate(pair, chosen, o.seed, o.queries));
  return dump(j);
}

inline std::string metrics_output(const WeightedTreePair& pair, const Options& o) {
  std::vector<NodeId> chosen;
  if (!o.select.empty()) {
    chosen = select_by_labels(pair.tree(), o.select);
  } else {
    chosen = svdt_greedy(pair, o.k, o.beta, pool_of(o)).selection.all();
  }
  const MetricReport r = evaluate(pair, chosen, o.seed, o.queries);
  return o.format == "json" ? dump(to_json(r)) : metrics_text(r);
}

inline std::string align_output(const Options& o) {
  if (o.input.size() != 2) throw Error(ErrorCode::kInvalidArgument, "--input", "align needs two inputs");
  const auto a = weighted_tree_from_json(detail::parse_json_text(read_file(o.input[0]), o.input[0]));
  const auto b = weighted_tree_from_json(detail::parse_json_text(read_file(o.input[1]), o.input[1]));
  if (o.mode == "match") {
    const MatchScore m = subtree_match_score(a, b);
    Json j = Json::object();
    j["anchor"] = a.tree().label(m.anchor);
    j["coverage"] = m.coverage;
    j["weight_agreement"] = m.weight_agreement;
    j["level_offset"] = m.level_offset;
    return dump(j);
  }
  return dump(to_json(zero_fill_align(a, b)));
}

inline std::string gen_output(const Options& o) {
  WeightModel model = UniformWeights{o.lo, o.hi};
  if (o.model == "correlated") model = CorrelatedWeights{o.rho, o.lo, o.hi};
  return dump(to_json(synth_generate(o.nodes, o.branching, model, o.seed)));
}

inline std::string viz_output(const WeightedTreePair& pair, const Options& o) {
  const SummaryObjective obj(pair, o.beta);
  const SvdtResult res = svdt_greedy(obj, o.k, pool_of(o));
  const auto gain = trace_gain(res.trace, pair.size());
  return emit_summary_graph(res.selection, pair, obj.scores(), gain);
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  Options o;
  CLI::App app{"Comparative summarization of two weighted trees"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "Input file(s)")->required()->expected(1, 2);
    cmd->add_option("--output", o.output, "Output path, - for stdout");
  };
  auto add_select = [&](CLI::App* cmd) {
    cmd->add_option("--k", o.k, "Number of representatives")->check(CLI::PositiveNumber);
    cmd->add_option("--beta", o.beta, "Distribution length")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Query sampling seed");
    cmd->add_option("--queries", o.queries, "Query count")->check(CLI::PositiveNumber);
    cmd->add_option("--preset", o.preset, "Parameter preset")->check(CLI::IsMember({"scale"}));
    cmd->add_flag("--non-leaf-only", o.non_leaf_only, "Only internal nodes may be representatives");
  };

  auto* summarize = app.add_subcommand("summarize", "Lazy greedy summary");
  add_io(summarize);
  add_select(summarize);
  summarize->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* split = app.add_subcommand("split-opt", "Optimized k1/k2 combination");
  add_io(split);
  add_select(split);
  split->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* baseline = app.add_subcommand("baseline", "FEQ or CAGG on the common tree");
  add_io(baseline);
  baseline->add_option("--algo", o.algo, "feq or cagg")->required()->check(CLI::IsMember({"feq", "cagg"}));
  baseline->add_option("--k", o.k, "Number of nodes")->check(CLI::PositiveNumber);
  baseline->add_option("--seed", o.seed, "Query sampling seed");
  baseline->add_option("--queries", o.queries, "Query count")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for small inputs");
  add_io(oracle);
  add_select(oracle);
  oracle->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* metrics = app.add_subcommand("metrics", "Evaluation metrics of a selection");
  add_io(metrics);
  add_select(metrics);
  metrics->add_option("--select", o.select, "Comma-separated labels (default: SVDT selection)");
  metrics->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"json", "text"}));

  auto* align = app.add_subcommand("align", "Combine two one-weight trees");
  add_io(align);
  align->add_option("--mode", o.mode, "zero-fill or match")->check(CLI::IsMember({"zero-fill", "match"}));

  auto* gen = app.add_subcommand("gen", "Synthetic tree pair");
  gen->add_option("--output", o.output, "Output path, - for stdout");
  gen->add_option("--nodes", o.nodes, "Node count")->check(CLI::PositiveNumber);
  gen->add_option("--branching", o.branching, "Maximum children per node")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--model", o.model, "uniform or correlated")->check(CLI::IsMember({"uniform", "correlated"}));
  gen->add_option("--lo", o.lo, "Lowest weight");
  gen->add_option("--hi", o.hi, "Highest weight");
  gen->add_option("--rho", o.rho, "Correlation for the correlated model")->check(CLI::Range(0.0, 1.0));

  auto* viz = app.add_subcommand("viz", "DOT rendering of the SVDT summary");
  add_io(viz);
  add_select(viz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (o.preset == "scale") {
    o.k = 10;
    o.beta = 3;
  }
  if (o.hi < o.lo) {
    err << "--hi must not be below --lo\n";
    return kExitUsage;
  }

  try {
    std::string text;
    if (*gen) {
      text = gen_output(o);
    } else if (*align) {
      text = align_output(o);
    } else {
      const WeightedTreePair pair = load_tree_pair(o.input);
      if (*summarize) {
        text = render_summary(summarize_document(pair, o), o.format);
      } else if (*split) {
        text = render_summary(split_document(pair, o), o.format);
      } else if (*oracle) {
        text = render_summary(oracle_document(pair, o), o.format);
      } else if (*baseline) {
        text = baseline_output(pair, o);
      } else if (*metrics) {
        text = metrics_output(pair, o);
      } else if (*viz) {
        text = viz_output(pair, o);
      }
    }
    write_output(o.output, text, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kExitUsage : kExitData;
  }
  return kExitOk;
}

}  // namespace treesum::cli

#endif  // TREESUM_TOOLS_CLI_HPP_
