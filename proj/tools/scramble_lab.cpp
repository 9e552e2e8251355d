// scramble-lab: command-line surface for the scramble/width/gonality toolkit.
//
// Subcommands: gen, compute (alias: invariants), check-scramble, check-tcd,
// check-embedding, gon, approx, suite. Exit codes: 0 pass, 1 check failure,
// 2 usage or parse error. SCRAMBLE_LAB_BUDGET_MS caps wall-clock time.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scramblelab/all.hpp"
#include "scramblelab/json_io.hpp"

namespace fs = std::filesystem;
using namespace scramblelab;

namespace {

Budgets global_budgets() {
  Budgets b;
  if (const char* ms = std::getenv("SCRAMBLE_LAB_BUDGET_MS")) {
    long long v = std::strtoll(ms, nullptr, 10);
    if (v > 0)
      b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(v);
  }
  return b;
}

int error_exit_code(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::bad_params:
      return 2;
    default:
      return 1;  // a validation or feasibility failure on otherwise-parsable input
  }
}

json parse_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_compute(const std::string& graph_path, const std::string& witness_dir,
                const std::vector<std::string>& only, const Budgets& budgets) {
  MultiGraph g = load_graph(graph_path);
  auto want = [&](const std::string& name) {
    return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
  };
  std::string stem = fs::path(graph_path).stem().string();
  auto witness_path = [&](const std::string& name, const std::string& ext) {
    return (fs::path(witness_dir) / (stem + "-" + name + ext)).string();
  };
  json inv = json::object(), witnesses = json::object(), skipped = json::object();
  auto record_skip = [&](const std::string& name, const error& e) {
    skipped[name] = std::string(e.what());
  };

  if (want("tw")) {
    try {
      TreewidthResult r = treewidth_exact(g, budgets);
      inv["tw"] = r.width;
      std::string p = witness_path("tw", ".json");
      write_text_file(p, json{{"schema", 1}, {"elimination_order", r.elimination_order}}.dump(2));
      witnesses["tw"] = p;
    } catch (const error& e) {
      record_skip("tw", e);
    }
  }
  if (want("dsn")) {
    try {
      DsnResult r = dsn_exact(g, budgets);
      inv["dsn"] = r.value;
      std::string p = witness_path("dsn", ".eggs");
      write_text_file(p, write_eggs_text(r.witness.eggs()));
      witnesses["dsn"] = p;
    } catch (const error& e) {
      record_skip("dsn", e);
    }
  }
  if (want("sn")) {
    try {
      InvariantInterval si = sn_interval(g, budgets);
      inv["sn"] = interval_json(si.lower, si.upper);
      if (si.lower_witness) {
        std::string p = witness_path("sn-lower", ".eggs");
        write_text_file(p, write_eggs_text(si.lower_witness->eggs()));
        witnesses["sn"] = p;
      }
      for (const auto& [component, reason] : si.skipped) skipped["sn." + component] = reason;
    } catch (const error& e) {
      record_skip("sn", e);
    }
  }
  if (want("cart")) {
    try {
      CartonValue cv = carton_value(g, budgets);
      if (cv.exact)
        inv["cart"] = cv.lower;
      else
        inv["cart"] = json::array({cv.lower, cv.upper ? json(*cv.upper) : json(nullptr)});
      if (cv.witness) {
        std::string p = witness_path("carton", ".eggs");
        write_text_file(p, write_eggs_text(cv.witness->eggs()));
        witnesses["cart"] = p;
      }
    } catch (const error& e) {
      record_skip("cart", e);
    }
  }
  if (want("scw")) {
    try {
      ScreewidthResult r = screewidth_exact(g, budgets);
      inv["scw"] = r.width;
      std::string p = witness_path("scw", ".json");
      write_text_file(p, tcd_to_json(r.witness).dump(2));
      witnesses["scw"] = p;
    } catch (const error& e) {
      record_skip("scw", e);
    }
  }
  if (want("gon")) {
    try {
      GonalityResult r = gonality_exact(g, -1, budgets);
      inv["gon"] = r.gonality;
      std::string p = witness_path("gon", ".json");
      write_text_file(p, divisor_to_json(r.witness).dump(2));
      witnesses["gon"] = p;
    } catch (const error& e) {
      record_skip("gon", e);
    }
  }
  emit(json{{"schema", 1},
            {"graph", write_graph_text(g)},
            {"invariants", inv},
            {"witnesses", witnesses},
            {"skipped", skipped}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and approximate scramble, width, and gonality invariants"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a named family member as a graph file");
  std::string gen_family, gen_out;
  std::vector<int> gen_params;
  gen->add_option("family", gen_family, "family name (path, cycle, complete, multipartite, "
                                        "grid, cylinder, rook, bipartite_plus_cycle, band, "
                                        "multipath, banana)")
      ->required();
  gen->add_option("params", gen_params, "integer family parameters");
  gen->add_option("-o,--out", gen_out, "output file (default: stdout)");

  auto* compute =
      app.add_subcommand("compute", "compute the invariant battery with witnesses");
  compute->alias("invariants");
  std::string compute_graph, compute_wdir = ".";
  std::vector<std::string> compute_only;
  compute->add_option("graph", compute_graph, "graph file")->required();
  compute->add_option("--witness-dir", compute_wdir, "directory for witness files");
  compute->add_option("--only", compute_only,
                      "restrict to named invariants (tw, dsn, sn, cart, scw, gon)");

  auto* chk_s = app.add_subcommand("check-scramble", "order report for a scramble file");
  std::string cs_graph, cs_eggs;
  chk_s->add_option("graph", cs_graph, "graph file")->required();
  chk_s->add_option("scramble", cs_eggs, "scramble (egg list) file")->required();

  auto* chk_t = app.add_subcommand("check-tcd", "validate a tree-cut decomposition and "
                                                "report its width");
  std::string ct_graph, ct_json;
  chk_t->add_option("graph", ct_graph, "graph file")->required();
  chk_t->add_option("tcd", ct_json, "decomposition JSON file")->required();

  auto* chk_e = app.add_subcommand("check-embedding", "validate a leaf embedding and "
                                                      "report its congestion");
  std::string ce_graph, ce_json;
  chk_e->add_option("graph", ce_graph, "graph file")->required();
  chk_e->add_option("embedding", ce_json, "embedding JSON file")->required();

  auto* gon_cmd = app.add_subcommand("gon", "exact gonality with a divisor witness");
  std::string gon_graph, gon_witness;
  int gon_cap = -1;
  gon_cmd->add_option("graph", gon_graph, "graph file")->required();
  gon_cmd->add_option("--cap", gon_cap, "degree cap (default: vertex count)");
  gon_cmd->add_option("--witness", gon_witness, "also write the witness divisor here");

  auto* approx_cmd = app.add_subcommand("approx", "approximation routines with guarantees");
  std::string ap_graph, ap_method;
  int ap_k = 0;
  long long ap_c = 2;
  approx_cmd->add_option("graph", ap_graph, "graph file")->required();
  approx_cmd->add_option("--method", ap_method, "khit, gavril, family, or kc")->required();
  approx_cmd->add_option("--k", ap_k, "egg size / scale parameter");
  approx_cmd->add_option("--c", ap_c, "scale factor for kc");

  auto* suite_cmd = app.add_subcommand("suite", "run a named theorem suite");
  std::string suite_id;
  long long suite_budget_ms = 0;
  suite_cmd->add_option("id", suite_id, "suite name")->required();
  suite_cmd->add_option("--budget-ms", suite_budget_ms, "wall-clock budget in milliseconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Budgets budgets = global_budgets();

  try {
    if (gen->parsed()) {
      MultiGraph g = generate_family({gen_family, gen_params});
      if (gen_out.empty())
        std::cout << write_graph_text(g);
      else
        save_graph(gen_out, g);
      return 0;
    }
    if (compute->parsed()) return cmd_compute(compute_graph, compute_wdir, compute_only, budgets);
    if (chk_s->parsed()) {
      MultiGraph g = load_graph(cs_graph);
      Scramble s = make_scramble(g, read_eggs_text(read_text_file(cs_eggs)));
      emit(order_report_to_json(s.order_report(budgets)));
      return 0;
    }
    if (chk_t->parsed()) {
      MultiGraph g = load_graph(ct_graph);
      TreeCutDecomposition t = tcd_from_json(parse_json_file(ct_json));
      check_tree_cut(g, t);
      emit(tcd_report_to_json(tcd_width(g, t)));
      return 0;
    }
    if (chk_e->parsed()) {
      MultiGraph g = load_graph(ce_graph);
      LeafEmbedding emb = embedding_from_json(parse_json_file(ce_json));
      check_embedding(g, emb);
      emit(congestion_report_to_json(embedding_congestion(g, emb)));
      return 0;
    }
    if (gon_cmd->parsed()) {
      MultiGraph g = load_graph(gon_graph);
      GonalityResult r = gonality_exact(g, gon_cap, budgets);
      emit(gonality_to_json(r));
      if (!gon_witness.empty()) write_text_file(gon_witness, divisor_to_json(r.witness).dump(2));
      return 0;
    }
    if (approx_cmd->parsed()) {
      MultiGraph g = load_graph(ap_graph);
      ApproxResult r;
      if (ap_method == "khit")
        r = approx_n_minus_alpha(g, ap_k > 0 ? ap_k : 2, budgets);
      else if (ap_method == "gavril")
        r = gavril_2approx(g);
      else if (ap_method == "family")
        r = family_gon_sn_approx(g, budgets);
      else if (ap_method == "kc")
        r = scaled_kc_approx(g, ap_k > 0 ? ap_k : 1, ap_c, budgets);
      else
        fail(errc::bad_params, "unknown approx method: " + ap_method);
      emit(approx_result_to_json(r));
      return 0;
    }
    if (suite_cmd->parsed()) {
      if (suite_budget_ms > 0)
        budgets.deadline = std::chrono::steady_clock::now() +
                           std::chrono::milliseconds(suite_budget_ms);
      SuiteReport rep = run_suite(suite_id, budgets);
      emit(suite_report_to_json(rep));
      return rep.pass ? 0 : 1;
    }
  } catch (const error& e) {
    emit(error_to_json(e));
    return error_exit_code(e);
  }
  return 2;
}
