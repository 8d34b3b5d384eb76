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

#ifndef TREESUM_IO_HPP_
#define TREESUM_IO_HPP_

// Tree documents (nested JSON records), CSV edge/weight pairs, summary
// documents and the tab-separated metric report.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treesum/alignment.hpp"
#include "treesum/metrics.hpp"
#include "treesum/scoring.hpp"
#include "treesum/tree.hpp"

namespace treesum {

using Json = nlohmann::ordered_json;

// Shortest representation that round-trips.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace detail {

struct FlatTree {
  std::vector<std::string> labels;
  std::vector<std::optional<NodeId>> parents;
  std::vector<Weight> w1;
  std::vector<Weight> w2;
};

inline Weight read_weight(const Json& rec, const char* key, const std::string& label,
                          const std::string& where) {
  auto it = rec.find(key);
  if (it == rec.end()) throw Error(ErrorCode::kParseError, where, std::string("missing '") + key + "'");
  if (it->is_number_integer()) {
    if (it->is_number_unsigned()) return it->get<Weight>();
    const auto v = it->get<std::int64_t>();
    if (v < 0) throw Error(ErrorCode::kNegativeWeight, label);
    return static_cast<Weight>(v);
  }
  if (it->is_number_float()) {
    const double v = it->get<double>();
    if (v < 0) throw Error(ErrorCode::kNegativeWeight, label);
  }
  throw Error(ErrorCode::kParseError, where, std::string("'") + key + "' is not a non-negative integer");
}

// Walks the nested records without recursion; `two_weights` picks between
// weight1/weight2 and a single weight.
inline FlatTree flatten_document(const Json& doc, bool two_weights) {
  FlatTree out;
  struct Item {
    const Json* rec;
    std::optional<NodeId> parent;
    std::string where;
  };
  std::vector<Item> stack{{&doc, std::nullopt, "/"}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    const Json& rec = *item.rec;
    if (!rec.is_object()) throw Error(ErrorCode::kParseError, item.where, "record is not an object");
    auto lab = rec.find("label");
    if (lab == rec.end() || !lab->is_string()) {
      throw Error(ErrorCode::kParseError, item.where, "missing string 'label'");
    }
    const std::string label = lab->get<std::string>();
    const NodeId id = node_id(out.labels.size());
    out.labels.push_back(label);
    out.parents.push_back(item.parent);
    if (two_weights) {
      out.w1.push_back(read_weight(rec, "weight1", label, item.where));
      out.w2.push_back(read_weight(rec, "weight2", label, item.where));
    } else {
      out.w1.push_back(read_weight(rec, "weight", label, item.where));
      out.w2.push_back(0);
    }
    auto kids = rec.find("children");
    if (kids == rec.end()) continue;
    if (!kids->is_array()) throw Error(ErrorCode::kParseError, item.where, "'children' is not an array");
    const std::string base = item.where == "/" ? "/children/" : item.where + "/children/";
    for (std::size_t i = kids->size(); i-- > 0;) {
      stack.push_back({&(*kids)[i], id, base + std::to_string(i)});
    }
  }
  return out;
}

// Builds nested records bottom-up without recursion.
template <typename Fill>
Json nest_records(const Tree& tree, Fill fill) {
  std::vector<Json> rec(tree.size());
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Json r = Json::object();
    r["label"] = tree.label(*it);
    fill(r, *it);
    const auto kids = tree.children(*it);
    if (!kids.empty()) {
      Json arr = Json::array();
      for (NodeId c : kids) arr.push_back(std::move(rec[c.index()]));
      r["children"] = std::move(arr);
    }
    rec[it->index()] = std::move(r);
  }
  return std::move(rec[tree.root().index()]);
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, source, e.what());
  }
}

inline bool has_two_weights(const Json& doc) {
  return doc.is_object() && doc.contains("weight1") && doc.contains("weight2");
}

}  // namespace detail

inline WeightedTreePair tree_pair_from_json(const Json& doc) {
  auto flat = detail::flatten_document(doc, true);
  return WeightedTreePair(Tree::from_parents(std::move(flat.labels), std::move(flat.parents)),
                          std::move(flat.w1), std::move(flat.w2));
}

inline WeightedTree weighted_tree_from_json(const Json& doc) {
  auto flat = detail::flatten_document(doc, false);
  return WeightedTree(Tree::from_parents(std::move(flat.labels), std::move(flat.parents)),
                      std::move(flat.w1));
}

inline Json to_json(const WeightedTreePair& pair) {
  return detail::nest_records(pair.tree(), [&](Json& r, NodeId x) {
    r["weight1"] = pair.freq1(x);
    r["weight2"] = pair.freq2(x);
  });
}

inline Json to_json(const WeightedTree& tree) {
  return detail::nest_records(tree.tree(), [&](Json& r, NodeId x) { r["weight"] = tree.weight(x); });
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, path, "cannot write file");
  out << text;
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct CsvRow {
  std::size_t line;
  std::vector<std::string> fields;
};

// Comma-separated rows; blank lines and '#' comments are skipped.
inline std::vector<CsvRow> read_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    CsvRow row{number, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      row.fields.push_back(trim(std::string_view(t).substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::int64_t parse_int(const std::string& s, const std::string& where) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, where, "'" + s + "' is not an integer");
  }
  return v;
}

}  // namespace detail

// Edges as `child,parent` rows (empty parent marks the root) and weights as
// `label,w1,w2` rows. Optional header rows are recognised by their column
// names.
inline WeightedTreePair parse_csv_pair(const std::string& edges_text,
                                       const std::string& weights_text,
                                       const std::string& edges_name = "edges",
                                       const std::string& weights_name = "weights") {
  auto edges = detail::read_csv(edges_text);
  auto weights = detail::read_csv(weights_text);
  if (!edges.empty() && edges.front().fields == std::vector<std::string>{"child", "parent"}) {
    edges.erase(edges.begin());
  }
  if (!weights.empty() &&
      weights.front().fields == std::vector<std::string>{"label", "w1", "w2"}) {
    weights.erase(weights.begin());
  }

  std::vector<NodeSpec> specs;
  std::unordered_map<std::string, std::size_t> index;
  auto touch = [&](const std::string& label) -> NodeSpec& {
    auto [it, fresh] = index.emplace(label, specs.size());
    if (fresh) specs.push_back(NodeSpec{label, std::nullopt, 0, 0});
    return specs[it->second];
  };
  std::unordered_map<std::string, bool> has_parent_row;
  for (const auto& row : edges) {
    const std::string where = edges_name + ":" + std::to_string(row.line);
    if (row.fields.size() != 2 || row.fields[0].empty()) {
      throw Error(ErrorCode::kParseError, where, "expected child,parent");
    }
    const std::string& child = row.fields[0];
    const std::string& parent = row.fields[1];
    if (has_parent_row[child]) throw Error(ErrorCode::kParseError, where, "'" + child + "' listed twice");
    has_parent_row[child] = true;
    touch(child);
    if (!parent.empty()) {
      touch(parent);
      specs[index[child]].parent = parent;
    }
  }
  if (specs.empty()) throw Error(ErrorCode::kEmptyTree, edges_name);

  std::vector<char> weighted(specs.size(), 0);
  for (const auto& row : weights) {
    const std::string where = weights_name + ":" + std::to_string(row.line);
    if (row.fields.size() != 3) throw Error(ErrorCode::kParseError, where, "expected label,w1,w2");
    auto it = index.find(row.fields[0]);
    if (it == index.end()) {
      throw Error(ErrorCode::kParseError, row.fields[0], where + ": label not present in edges");
    }
    NodeSpec& spec = specs[it->second];
    spec.weight1 = detail::parse_int(row.fields[1], where);
    spec.weight2 = detail::parse_int(row.fields[2], where);
    weighted[it->second] = 1;
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!weighted[i]) throw Error(ErrorCode::kParseError, specs[i].label, weights_name + ": no weights");
  }
  return build_tree(std::span<const NodeSpec>(specs));
}

inline bool is_csv_path(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

// One path: a two-weight tree document. Two paths: either two CSV files
// (edges, weights) or two one-weight documents, which are zero-fill aligned.
inline WeightedTreePair load_tree_pair(const std::vector<std::string>& paths) {
  if (paths.size() == 1) {
    const Json doc = detail::parse_json_text(read_file(paths[0]), paths[0]);
    if (!detail::has_two_weights(doc)) {
      throw Error(ErrorCode::kParseError, paths[0], "root record lacks weight1/weight2");
    }
    return tree_pair_from_json(doc);
  }
  if (paths.size() == 2) {
    if (is_csv_path(paths[0]) && is_csv_path(paths[1])) {
      return parse_csv_pair(read_file(paths[0]), read_file(paths[1]), paths[0], paths[1]);
    }
    const Json a = detail::parse_json_text(read_file(paths[0]), paths[0]);
    const Json b = detail::parse_json_text(read_file(paths[1]), paths[1]);
    return zero_fill_align(weighted_tree_from_json(a), weighted_tree_from_json(b));
  }
  throw Error(ErrorCode::kInvalidArgument, "input", "expected one or two input paths");
}

struct SelectedNode {
  NodeId node;
  std::string label;
  Side side = Side::kSim;
  double gain = 0.0;
  double simdif = 0.0;
};

struct SummaryDocument {
  std::string algorithm;
  std::size_t k = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t beta = 0;
  double gamma = 1.0;
  std::vector<SelectedNode> selected;
  double summary_score = 0.0;
  bool truncated = false;
  std::optional<MetricReport> metrics;
};

inline Json to_json(const MetricReport& r) {
  Json j = Json::object();
  j["div"] = r.div;
  j["cq"] = r.cq;
  j["ald"] = r.ald;
  j["query_seed"] = r.query_seed;
  j["query_count"] = r.query_count;
  return j;
}

inline Json to_json(const SummaryDocument& doc) {
  Json j = Json::object();
  j["algorithm"] = doc.algorithm;
  j["k"] = doc.k;
  j["k1"] = doc.k1;
  j["k2"] = doc.k2;
  j["beta"] = doc.beta;
  j["gamma"] = doc.gamma;
  Json sel = Json::array();
  for (const auto& s : doc.selected) {
    Json e = Json::object();
    e["node"] = s.node.value;
    e["label"] = s.label;
    e["side"] = side_name(s.side);
    e["gain"] = s.gain;
    e["simdif"] = s.simdif;
    sel.push_back(std::move(e));
  }
  j["selected"] = std::move(sel);
  j["summary_score"] = doc.summary_score;
  j["truncated"] = doc.truncated;
  if (doc.metrics) j["metrics"] = to_json(*doc.metrics);
  return j;
}

// `metric<TAB>value` lines.
inline std::string metrics_text(const MetricReport& r) {
  std::string out;
  out += "div\t" + format_double(r.div) + "\n";
  out += "cq\t" + format_double(r.cq) + "\n";
  out += "ald\t" + format_double(r.ald) + "\n";
  out += "query_seed\t" + std::to_string(r.query_seed) + "\n";
  out += "query_count\t" + std::to_string(r.query_count) + "\n";
  return out;
}

// Selected nodes in ascending id order; `gain` holds the per-node gain to
// report (missing entries read as 0).
inline SummaryDocument make_summary_document(std::string algorithm, const SummaryObjective& obj,
                                             const SummarySelection& sel,
                                             std::span<const double> gain, std::size_t beta) {
  SummaryDocument doc;
  doc.algorithm = std::move(algorithm);
  doc.k = sel.k;
  doc.k1 = sel.s1.size();
  doc.k2 = sel.s2.size();
  doc.beta = beta;
  doc.gamma = obj.gamma();
  for (NodeId x : sel.all()) {
    const Side side = std::binary_search(sel.s1.begin(), sel.s1.end(), x) ? Side::kSim : Side::kDif;
    doc.selected.push_back({x, obj.tree().label(x), side,
                            x.index() < gain.size() ? gain[x.index()] : 0.0,
                            obj.scores()[x.index()]});
  }
  doc.summary_score = summary_score(obj, sel).value;
  return doc;
}

}  // namespace treesum

#endif  // TREESUM_IO_HPP_
