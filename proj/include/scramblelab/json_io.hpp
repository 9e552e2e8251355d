#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "scramblelab/chipfiring.hpp"
#include "scramblelab/congestion.hpp"
#include "scramblelab/errors.hpp"
#include "scramblelab/io.hpp"
#include "scramblelab/multigraph.hpp"
#include "scramblelab/scramble.hpp"
#include "scramblelab/search.hpp"
#include "scramblelab/suites.hpp"
#include "scramblelab/treecut.hpp"
#include "scramblelab/treewidth.hpp"

namespace scramblelab {

using json = nlohmann::ordered_json;

inline json error_to_json(const error& e) {
  return json{{"schema", 1}, {"error", errc_name(e.code())}, {"message", e.what()}};
}

inline json edge_list_json(const std::vector<std::pair<int, int>>& edges) {
  json arr = json::array();
  for (auto [u, v] : edges) arr.push_back(json::array({u, v}));
  return arr;
}

inline json order_report_to_json(const OrderReport& r) {
  json j{{"schema", 1},
         {"hitting", r.hitting},
         {"egg_cut", r.egg_cut ? json(*r.egg_cut) : json("inf")},
         {"order", r.order},
         {"hitting_witness", r.hitting_witness}};
  j["cut_witness"] = r.cut_witness ? edge_list_json(*r.cut_witness) : json(nullptr);
  return j;
}

inline json scramble_to_json(const Scramble& s) {
  json eggs = json::array();
  for (const auto& egg : s.eggs()) eggs.push_back(egg);
  return json{{"schema", 1}, {"eggs", eggs}, {"disjoint", s.is_disjoint()}};
}

inline json divisor_to_json(const Divisor& d) {
  return json{{"schema", 1}, {"chips", d}};
}

inline Divisor divisor_from_json(const json& j, int n) {
  if (!j.contains("chips") || !j["chips"].is_array())
    fail(errc::parse_error, "divisor json needs a \"chips\" array");
  Divisor d;
  for (const auto& c : j["chips"]) {
    if (!c.is_number_integer()) fail(errc::parse_error, "chip counts must be integers");
    d.push_back(c.get<long long>());
  }
  if (static_cast<int>(d.size()) != n)
    fail(errc::parse_error, "divisor length does not match the graph");
  return d;
}

inline json gonality_to_json(const GonalityResult& r) {
  return json{{"schema", 1}, {"gonality", r.gonality}, {"witness", {{"chips", r.witness}}}};
}

inline json tcd_to_json(const TreeCutDecomposition& t) {
  json bags = json::object();
  for (int b = 0; b < t.nodes; ++b)
    if (b < static_cast<int>(t.bags.size()) && !t.bags[b].empty())
      bags[std::to_string(b)] = t.bags[b];
  return json{{"schema", 1}, {"nodes", t.nodes}, {"links", edge_list_json(t.links)}, {"bags", bags}};
}

inline TreeCutDecomposition tcd_from_json(const json& j) {
  if (!j.contains("nodes") || !j["nodes"].is_number_integer())
    fail(errc::parse_error, "tree-cut json needs an integer \"nodes\"");
  TreeCutDecomposition t;
  t.nodes = j["nodes"].get<int>();
  if (t.nodes < 1) fail(errc::parse_error, "tree-cut json needs at least one node");
  t.bags.assign(t.nodes, {});
  if (j.contains("links")) {
    for (const auto& l : j["links"]) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
        fail(errc::parse_error, "links must be [a, b] pairs");
      t.links.emplace_back(l[0].get<int>(), l[1].get<int>());
    }
  }
  if (j.contains("bags")) {
    if (!j["bags"].is_object()) fail(errc::parse_error, "\"bags\" must map node ids to vertex lists");
    for (const auto& [key, val] : j["bags"].items()) {
      int b = -1;
      try {
        b = std::stoi(key);
      } catch (const std::exception&) {
        fail(errc::parse_error, "bag keys must be node ids");
      }
      if (b < 0 || b >= t.nodes) fail(errc::parse_error, "bag key out of range");
      if (!val.is_array()) fail(errc::parse_error, "each bag must be a vertex list");
      for (const auto& v : val) {
        if (!v.is_number_integer()) fail(errc::parse_error, "bag entries must be vertex ids");
        t.bags[b].push_back(v.get<int>());
      }
    }
  }
  return t;
}

inline json tcd_report_to_json(const TcdWidthReport& r) {
  return json{{"schema", 1},
              {"width", r.width},
              {"link_width", r.link_width},
              {"node_width", r.node_width},
              {"link_values", r.link_values},
              {"node_values", r.node_values}};
}

inline json embedding_to_json(const LeafEmbedding& e) {
  json leaf_map = json::object();
  for (size_t v = 0; v < e.leaf_of.size(); ++v) leaf_map[std::to_string(v)] = e.leaf_of[v];
  return json{
      {"schema", 1}, {"nodes", e.nodes}, {"links", edge_list_json(e.links)}, {"leaf_map", leaf_map}};
}

inline LeafEmbedding embedding_from_json(const json& j) {
  if (!j.contains("nodes") || !j["nodes"].is_number_integer())
    fail(errc::parse_error, "embedding json needs an integer \"nodes\"");
  LeafEmbedding e;
  e.nodes = j["nodes"].get<int>();
  if (e.nodes < 1) fail(errc::parse_error, "embedding json needs at least one node");
  if (j.contains("links")) {
    for (const auto& l : j["links"]) {
      if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
        fail(errc::parse_error, "links must be [a, b] pairs");
      e.links.emplace_back(l[0].get<int>(), l[1].get<int>());
    }
  }
  if (!j.contains("leaf_map") || !j["leaf_map"].is_object())
    fail(errc::parse_error, "embedding json needs a \"leaf_map\" object");
  for (const auto& [key, val] : j["leaf_map"].items()) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      fail(errc::parse_error, "leaf_map keys must be vertex ids");
    }
    if (v < 0) fail(errc::parse_error, "leaf_map keys must be vertex ids");
    if (!val.is_number_integer()) fail(errc::parse_error, "leaf_map values must be node ids");
    if (v >= static_cast<int>(e.leaf_of.size())) e.leaf_of.resize(v + 1, -1);
    e.leaf_of[v] = val.get<int>();
  }
  return e;
}

inline json congestion_report_to_json(const CongestionReport& r) {
  return json{{"schema", 1}, {"congestion", r.congestion}, {"node_loads", r.node_loads}};
}

inline json interval_json(long long lower, std::optional<long long> upper) {
  if (upper && *upper == lower) return json(lower);
  return json::array({lower, upper ? json(*upper) : json(nullptr)});
}

inline json approx_result_to_json(const ApproxResult& r) {
  json j{{"schema", 1},
         {"value", r.value},
         {"factor", r.factor},
         {"direction", r.direction == ApproxDirection::minimize ? "upper-bounds-from-above"
                                                                : "lower-bounds-from-below"}};
  if (!r.witness.empty() || r.matching.empty()) j["witness"] = r.witness;
  if (!r.matching.empty()) j["matching"] = edge_list_json(r.matching);
  if (r.k != 0) j["k"] = r.k;
  if (r.case_tag != 0) j["case"] = r.case_tag;
  return j;
}

inline json suite_report_to_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const SuiteCheck& c : rep.checks) {
    json jc{{"id", c.id},
            {"rule", c.rule},
            {"graph", c.graph},
            {"pass", c.pass},
            {"values", c.values},
            {"runtime_ms", c.runtime_ms}};
    if (!c.repro.empty()) jc["repro"] = c.repro;
    checks.push_back(std::move(jc));
  }
  return json{{"schema", 1},
              {"suite", rep.suite},
              {"pass", rep.pass},
              {"runtime_ms", rep.runtime_ms},
              {"checks", checks}};
}

}  // namespace scramblelab
