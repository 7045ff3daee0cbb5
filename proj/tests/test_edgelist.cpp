#include <gtest/gtest.h>

#include <sstream>

#include "tightcut/edgelist.hpp"
#include "tightcut/errors.hpp"

using namespace tightcut;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(EdgeList, ReadsCommentsAndParallelEdges) {
  Graph g = parse("# two parallel edges\np 2 2\ne 0 1\n# middle\ne 1 0\n");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edge(1).u + g.edge(1).v, 1);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error("p 3 1\ne 0 3\n"), "line 2: vertex out of range");
  EXPECT_NE(parse_error("e 0 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_error("p 2 1\np 2 1\ne 0 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("p 2 1\ne 1 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("p 2 1\ne 0 1 7\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("p 2 1\nx 0 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_error("p 2 2\ne 0 1\n").find("declares 2 edges, found 1"), std::string::npos);
  EXPECT_NE(parse_error("").find("header"), std::string::npos);
  EXPECT_NE(parse_error("p two 1\n").find("line 1"), std::string::npos);
}

TEST(EdgeList, WriterSortsAndRoundTrips) {
  Graph g = Graph::from_pairs(4, {{3, 2}, {0, 1}, {2, 0}, {1, 0}});
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "p 4 4\ne 0 1\ne 0 1\ne 0 2\ne 2 3\n");
  Graph back = parse(out.str());
  EXPECT_EQ(back.num_edges(), 4);
  std::ostringstream again;
  write_edge_list(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(EdgeList, WriterRelabelsContractedVertices) {
  Graph g({2, 7, 9}, {{4, 2, 9}, {5, 7, 9}});
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "p 3 2\ne 0 2\ne 1 2\n");
}
