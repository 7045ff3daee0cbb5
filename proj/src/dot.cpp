#include "tightcut/dot.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tightcut/errors.hpp"

namespace tightcut {

namespace {

std::string set_label(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.members().size(); ++i) out += (i ? "," : "") + std::to_string(s.members()[i]);
  return out + "}";
}

}  // namespace

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream os;
  os << "graph \"" << style.name << "\" {\n  node [shape=circle];\n";
  for (Vertex v : g.vertices()) {
    const VertexSet from = g.origin(v);
    const bool contracted = from != VertexSet{v};
    os << "  " << v << " [";
    if (contracted)
      os << "shape=box, label=\"" << v << " = " << set_label(from) << "\"";
    else
      os << "label=\"" << v << "\"";
    if (style.shore.contains(v)) os << ", style=filled, fillcolor=lightblue";
    if (style.contract_next.contains(v)) os << (style.shore.contains(v) ? ", peripheries=2" : ", style=dashed");
    os << "];\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v << " [label=\"e" << e.id << "\"";
    if (!style.shore.empty() && style.shore.contains(e.u) != style.shore.contains(e.v))
      os << ", color=red, penwidth=2.5";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> write_certificate_dot(const DecompositionCertificate& cert, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  auto emit = [&](const Graph& g, const DotStyle& style) {
    const std::string path = (std::filesystem::path(dir) / (style.name + ".dot")).string();
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_dot(g, style);
    paths.push_back(path);
  };
  // Track the reference shore through the contractions.
  VertexSet x = cert.input_shore;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertificateStep& st = cert.steps[i];
    emit(st.graph, {"step_" + std::to_string(i + 1), x, st.contracted_shore});
    if (st.contracted_shore.subset_of(x)) x = x.minus(st.contracted_shore).with(st.new_vertex);
  }
  emit(cert.final_graph, {"step_" + std::to_string(cert.steps.size() + 1), x, {}});
  return paths;
}

}  // namespace tightcut
