#include "tightcut/edgelist.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string text;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text[0] == '#') continue;
    std::istringstream ls(text);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n >= 0) fail(line_no, "duplicate header");
      if (!(ls >> n >> m) || n < 0 || m < 0) fail(line_no, "malformed header, expected 'p <n> <m>'");
    } else if (tag == "e") {
      if (n < 0) fail(line_no, "edge before header");
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) fail(line_no, "malformed edge, expected 'e <u> <v>'");
      if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex out of range");
      if (u == v) fail(line_no, "loop edges are not allowed");
      pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      fail(line_no, "unexpected line '" + text + "'");
    }
    std::string rest;
    if (ls >> rest) fail(line_no, "trailing tokens");
  }
  if (n < 0) fail(line_no, "missing header");
  if (static_cast<int>(pairs.size()) != m)
    fail(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
  return Graph::from_pairs(n, pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  out << "p " << g.num_vertices() << ' ' << pairs.size() << '\n';
  for (auto [a, b] : pairs) out << "e " << a << ' ' << b << '\n';
}

}  // namespace tightcut
