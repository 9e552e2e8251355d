#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scramblelab/multigraph.hpp"

namespace scramblelab {

// Graph text format:
//   # comment                 (a "# family: <tag>" comment round-trips)
//   n <vertex-count>
//   u v [mult]                one line per edge, 0-based, mult defaults to 1
// The writer emits sorted edges and omits mult 1, so its output is bit-exact
// reproducible.
inline std::string write_graph_text(const MultiGraph& g) {
  std::ostringstream os;
  if (g.annotation()) os << "# family: " << *g.annotation() << "\n";
  os << "n " << g.n() << "\n";
  for (const Edge& e : g.edges()) {
    os << e.u << ' ' << e.v;
    if (e.mult != 1) os << ' ' << e.mult;
    os << "\n";
  }
  return os.str();
}

inline MultiGraph read_graph_text(const std::string& text) {
  std::istringstream is(text);
  std::string line, annotation;
  int n = -1;
  std::vector<Edge> es;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string where = "graph line " + std::to_string(lineno);
    if (line.rfind("# family:", 0) == 0) {
      annotation = line.substr(9);
      size_t b = annotation.find_first_not_of(" \t");
      annotation = b == std::string::npos ? "" : annotation.substr(b);
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string kw;
      require(static_cast<bool>(ls >> kw) && kw == "n", errc::parse_error,
              where + ": expected 'n <count>' header");
      require(static_cast<bool>(ls >> n) && n >= 1, errc::parse_error,
              where + ": bad vertex count");
    } else {
      Edge e;
      require(static_cast<bool>(ls >> e.u >> e.v), errc::parse_error,
              where + ": expected 'u v [mult]'");
      if (!(ls >> e.mult)) e.mult = 1;
      if (e.u > e.v) std::swap(e.u, e.v);
      es.push_back(e);
    }
    std::string rest;
    require(!(ls >> rest), errc::parse_error, where + ": trailing tokens");
  }
  require(n >= 1, errc::parse_error, "graph text has no 'n <count>' header");
  MultiGraph g(n, es);
  if (!annotation.empty()) g = g.with_annotation(annotation);
  return g;
}

// Egg-list text format:
//   scramble <egg-count>
//   v1 v2 ...                 one line per egg
inline std::string write_eggs_text(const std::vector<std::vector<int>>& eggs) {
  std::ostringstream os;
  os << "scramble " << eggs.size() << "\n";
  for (const auto& egg : eggs) {
    for (size_t i = 0; i < egg.size(); ++i) os << (i ? " " : "") << egg[i];
    os << "\n";
  }
  return os.str();
}

inline std::vector<std::vector<int>> read_eggs_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  long long expected = -1;
  std::vector<std::vector<int>> eggs;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string where = "scramble line " + std::to_string(lineno);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (expected < 0) {
      std::string kw;
      require(static_cast<bool>(ls >> kw) && kw == "scramble", errc::parse_error,
              where + ": expected 'scramble <egg-count>' header");
      require(static_cast<bool>(ls >> expected) && expected >= 0, errc::parse_error,
              where + ": bad egg count");
      std::string rest;
      require(!(ls >> rest), errc::parse_error, where + ": trailing tokens");
    } else {
      std::vector<int> egg;
      int v;
      while (ls >> v) egg.push_back(v);
      require(ls.eof(), errc::parse_error, where + ": bad vertex id");
      eggs.push_back(std::move(egg));
    }
  }
  require(expected >= 0, errc::parse_error, "scramble text has no header");
  require(static_cast<long long>(eggs.size()) == expected, errc::parse_error,
          "scramble header count does not match egg lines");
  return eggs;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), errc::parse_error, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), errc::parse_error, "cannot write file: " + path);
  out << text;
}

inline MultiGraph load_graph(const std::string& path) { return read_graph_text(read_text_file(path)); }
inline void save_graph(const std::string& path, const MultiGraph& g) {
  write_text_file(path, write_graph_text(g));
}

}  // namespace scramblelab
