#pragma once

#include <string>

#include "tightcut/decompose.hpp"

namespace tightcut {

struct DotStyle {
  std::string name = "G";
  VertexSet shore;          // filled vertices; edges of its boundary drawn bold red
  VertexSet contract_next;  // vertices about to be shrunk, drawn dashed
};

// Graphviz text. Contracted vertices are boxes labelled with their
// provenance ("7 = {2,3,4}").
std::string to_dot(const Graph& g, const DotStyle& style);

// One DOT document per certificate graph: step_1.dot .. step_{r}.dot, the
// last being the final graph. Returns the written paths.
std::vector<std::string> write_certificate_dot(const DecompositionCertificate& cert, const std::string& dir);

}  // namespace tightcut
