// End-to-end checks of the scramble-lab binary: every subcommand, the JSON
// output schemas, witness files that re-verify in-process, and the exit-code
// contract (0 pass, 1 failed check, 2 usage/parse error).

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "scramblelab/all.hpp"
#include "scramblelab/json_io.hpp"

using namespace scramblelab;
namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "scramble-lab-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct CliRun {
  int code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args, const std::string& env = "") {
  fs::path out_path = work_dir() / "stdout.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + CLI_PATH + " " + args + " > " +
                    out_path.string() + " 2> " + (work_dir() / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  return r;
}

std::string graph_file(const std::string& name, const MultiGraph& g) {
  fs::path p = work_dir() / name;
  save_graph(p.string(), g);
  return p.string();
}

std::string text_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  write_text_file(p.string(), text);
  return p.string();
}

}  // namespace

TEST_CASE("gen writes family graphs to stdout and files") {
  CliRun out = run_cli("gen cycle 5");
  CHECK(out.code == 0);
  CHECK(read_graph_text(out.out) == make_cycle(5));
  CHECK(out.out.find("family: cycle 5") != std::string::npos);

  fs::path saved = work_dir() / "grid34.graph";
  CHECK(run_cli("gen grid 3 4 -o " + saved.string()).code == 0);
  MultiGraph g = load_graph(saved.string());
  CHECK(g == make_grid(3, 4));
  CHECK(verified_family(g).has_value());

  CliRun banana = run_cli("gen banana 3");
  CHECK(banana.code == 0);
  CHECK(read_graph_text(banana.out) == make_banana(3));  // multiplicity survives

  CliRun bad = run_cli("gen quux 3");
  CHECK(bad.code == 2);
  json err = json::parse(bad.out);
  CHECK(err["schema"] == 1);
  CHECK(err.contains("error"));
}

TEST_CASE("compute emits the battery and live witness files") {
  std::string g_path = graph_file("c4.graph", make_cycle(4));
  fs::path wdir = work_dir() / "witnesses";
  fs::create_directories(wdir);
  CliRun r = run_cli("compute " + g_path + " --witness-dir " + wdir.string());
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["invariants"]["tw"] == 2);
  CHECK(j["invariants"]["dsn"] == 2);
  CHECK(j["invariants"]["sn"] == 2);
  CHECK(j["invariants"]["cart"] == 2);
  CHECK(j["invariants"]["scw"] == 2);
  CHECK(j["invariants"]["gon"] == 2);
  CHECK(j["skipped"].empty());

  MultiGraph c4 = make_cycle(4);
  // every witness file must re-verify against the graph it was written for
  Scramble dsn_witness = make_scramble(c4, read_eggs_text(read_text_file(j["witnesses"]["dsn"].get<std::string>())));
  CHECK(dsn_witness.order_report().order == 2);
  CHECK(dsn_witness.is_disjoint());

  json tw_w = json::parse(read_text_file(j["witnesses"]["tw"].get<std::string>()));
  CHECK(elimination_order_width(c4, tw_w["elimination_order"].get<std::vector<int>>()) == 2);

  TreeCutDecomposition tcd = tcd_from_json(json::parse(read_text_file(j["witnesses"]["scw"].get<std::string>())));
  check_tree_cut(c4, tcd);
  CHECK(tcd_width(c4, tcd).width == 2);

  Divisor gon_w =
      divisor_from_json(json::parse(read_text_file(j["witnesses"]["gon"].get<std::string>())), 4);
  CHECK(has_positive_rank(c4, gon_w));
  long long chips = 0;
  for (long long c : gon_w) chips += c;
  CHECK(chips == 2);

  // the cycle value comes from the family formula: no witness file to point at
  CHECK_FALSE(j["witnesses"].contains("cart"));
}

TEST_CASE("invariants alias restricts to the requested set") {
  std::string g_path = graph_file("p5.graph", make_path(5));
  fs::path wdir = work_dir() / "witnesses-alias";
  fs::create_directories(wdir);
  CliRun r = run_cli("invariants " + g_path + " --only tw --only gon --only cart --witness-dir " +
                     wdir.string());
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["invariants"].size() == 3);
  CHECK(j["invariants"]["tw"] == 1);
  CHECK(j["invariants"]["gon"] == 1);
  CHECK(j["invariants"]["cart"] == 1);
  // the path goes through the tiny brute force, which does carry a witness
  Scramble cart_witness = make_scramble(
      make_path(5), read_eggs_text(read_text_file(j["witnesses"]["cart"].get<std::string>())));
  CHECK(cart_witness.size() == 1);
  CHECK(cart_witness.order_report().order == 1);
}

TEST_CASE("check-scramble reports the order and enforces egg validity") {
  std::string g_path = graph_file("c4b.graph", make_cycle(4));
  std::string eggs = text_file("arcs.eggs", "scramble 2\n0 1\n2 3\n");
  CliRun r = run_cli("check-scramble " + g_path + " " + eggs);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["hitting"] == 2);
  CHECK(j["egg_cut"] == 2);
  CHECK(j["order"] == 2);
  CHECK(j["cut_witness"].size() == 2);

  // {0, 2} is not connected in the 4-cycle: a failed check, not a parse error
  std::string bad = text_file("bad.eggs", "scramble 2\n0 2\n1 3\n");
  CHECK(run_cli("check-scramble " + g_path + " " + bad).code == 1);

  std::string garbled = text_file("garbled.eggs", "eggs 1\n0\n");
  CHECK(run_cli("check-scramble " + g_path + " " + garbled).code == 2);
}

TEST_CASE("check-tcd validates and measures decompositions") {
  std::string g_path = graph_file("c4c.graph", make_cycle(4));
  TreeCutDecomposition solo;
  solo.bags = {{0, 1, 2, 3}};
  std::string tcd_path = text_file("solo.json", tcd_to_json(solo).dump(2));
  CliRun r = run_cli("check-tcd " + g_path + " " + tcd_path);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["width"] == 4);
  CHECK(j["node_width"] == 4);

  std::string missing =
      text_file("missing.json", R"({"nodes": 1, "links": [], "bags": {"0": [0, 1, 2]}})");
  CHECK(run_cli("check-tcd " + g_path + " " + missing).code == 1);
  std::string garbage = text_file("garbage.json", "not json at all");
  CHECK(run_cli("check-tcd " + g_path + " " + garbage).code == 2);
}

TEST_CASE("check-embedding validates and measures congestion") {
  std::string g_path = graph_file("p3.graph", make_path(3));
  LeafEmbedding star;
  star.nodes = 4;
  star.links = {{0, 1}, {0, 2}, {0, 3}};
  star.leaf_of = {1, 2, 3};
  std::string emb_path = text_file("star.json", embedding_to_json(star).dump(2));
  CliRun r = run_cli("check-embedding " + g_path + " " + emb_path);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["congestion"] == 2);

  LeafEmbedding broken = star;
  broken.leaf_of = {0, 2, 3};  // vertex at the internal hub
  std::string broken_path = text_file("broken.json", embedding_to_json(broken).dump(2));
  CHECK(run_cli("check-embedding " + g_path + " " + broken_path).code == 1);
}

TEST_CASE("gon reports the value and writes a live divisor") {
  std::string g_path = graph_file("c5.graph", make_cycle(5));
  fs::path w = work_dir() / "c5-divisor.json";
  CliRun r = run_cli("gon " + g_path + " --witness " + w.string());
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["gonality"] == 2);
  Divisor d = divisor_from_json(json::parse(read_text_file(w.string())), 5);
  CHECK(has_positive_rank(make_cycle(5), d));

  CHECK(run_cli("gon " + g_path + " --cap 1").code == 1);  // no rank-1 divisor fits
}

TEST_CASE("approx dispatches methods and keeps the exit contract") {
  std::string k4 = graph_file("k4.graph", make_complete(4));
  CliRun gavril = run_cli("approx " + k4 + " --method gavril");
  REQUIRE(gavril.code == 0);
  json j = json::parse(gavril.out);
  CHECK(j["value"] == 4.0);
  CHECK(j["factor"] == 2.0);
  CHECK(j["direction"] == "upper-bounds-from-above");
  CHECK(j["matching"].size() == 2);

  std::string c4 = graph_file("c4d.graph", make_cycle(4));
  CliRun kc = run_cli("approx " + c4 + " --method kc --k 1 --c 2");
  REQUIRE(kc.code == 0);
  CHECK(json::parse(kc.out)["value"] == 2.0);

  CHECK(run_cli("approx " + c4 + " --method family").code == 1);  // no case fits
  CHECK(run_cli("approx " + c4 + " --method bogus").code == 2);
}

TEST_CASE("suite runs report structured pass/fail") {
  CliRun ok = run_cli("suite cartonbound");
  REQUIRE(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["suite"] == "cartonbound");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].is_array());
  CHECK(j["checks"].size() >= 3);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("rule"));
    CHECK(c["pass"] == true);
  }

  CHECK(run_cli("suite no-such-suite").code == 2);
}

TEST_CASE("wall-clock budget degrades to skips, not failures") {
  std::string g_path = graph_file("grid44.graph", make_grid(4, 4));
  CliRun r = run_cli("compute " + g_path, "SCRAMBLE_LAB_BUDGET_MS=1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK_FALSE(j["skipped"].empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("compute").code == 2);
  CHECK(run_cli("compute " + (work_dir() / "no-such-file.graph").string()).code == 2);
}
