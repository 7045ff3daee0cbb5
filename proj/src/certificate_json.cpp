#include "tightcut/certificate_json.hpp"

#include "tightcut/errors.hpp"

namespace tightcut {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return json(s.members()); }

json barrier_to_json(const BarrierWitness& w) {
  json parts = json::array();
  for (const VertexSet& p : w.barrier.odd_parts) parts.push_back(set_to_json(p));
  return {{"barrier", set_to_json(w.barrier.members)}, {"odd_parts", parts}, {"component", w.component}};
}

json twosep_to_json(const TwoSeparation& s) {
  return {{"pair", {s.u, s.v}}, {"side1", set_to_json(s.side1)}, {"side2", set_to_json(s.side2)}};
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::vector<int> int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  const json& a = as_array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(as_int(a[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Vertex sets must be listed strictly increasing so that a set round-trips.
VertexSet set_from_json(const json& j, const std::string& path) {
  std::vector<int> v = int_list(j, path);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) throw SchemaError(path, "vertex set is not strictly increasing");
  return VertexSet(std::move(v));
}

BarrierWitness barrier_from_json(const json& j, const std::string& path) {
  BarrierWitness w;
  w.barrier.members = set_from_json(field(j, path, "barrier"), path + ".barrier");
  const std::string pp = path + ".odd_parts";
  const json& parts = as_array(field(j, path, "odd_parts"), pp);
  for (std::size_t i = 0; i < parts.size(); ++i)
    w.barrier.odd_parts.push_back(set_from_json(parts[i], pp + "[" + std::to_string(i) + "]"));
  w.component = as_int(field(j, path, "component"), path + ".component");
  return w;
}

TwoSeparation twosep_from_json(const json& j, const std::string& path) {
  TwoSeparation s;
  std::vector<int> pair = int_list(field(j, path, "pair"), path + ".pair");
  if (pair.size() != 2) throw SchemaError(path + ".pair", "expected two vertices");
  s.u = pair[0];
  s.v = pair[1];
  s.side1 = set_from_json(field(j, path, "side1"), path + ".side1");
  s.side2 = set_from_json(field(j, path, "side2"), path + ".side2");
  return s;
}

json witness_to_json(const ElpWitness& w) {
  json out = w.kind == ElpKind::kBarrier ? barrier_to_json(w.barrier) : twosep_to_json(w.twosep);
  out["kind"] = w.kind == ElpKind::kBarrier ? "barrier" : "twosep";
  return out;
}

ElpWitness witness_from_json(const json& j, const std::string& path) {
  const json& kind = field(j, path, "kind");
  ElpWitness w;
  if (kind == "barrier") {
    w.kind = ElpKind::kBarrier;
    w.barrier = barrier_from_json(j, path);
  } else if (kind == "twosep") {
    w.kind = ElpKind::kTwoSeparation;
    w.twosep = twosep_from_json(j, path);
  } else {
    throw SchemaError(path + ".kind", "expected \"barrier\" or \"twosep\"");
  }
  return w;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  std::vector<int> ids;
  bool dense_vertices = true;
  bool dense_edges = true;
  int k = 0;
  for (Vertex v : g.vertices()) dense_vertices = dense_vertices && v == k++;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({e.u, e.v});
    ids.push_back(e.id);
    dense_edges = dense_edges && e.id == static_cast<int>(i);
  }
  json out{{"n", g.num_vertices()}, {"edges", edges}};
  if (!dense_vertices) out["vertices"] = set_to_json(g.vertices());
  if (!dense_edges) out["edge_ids"] = ids;
  return out;
}

Graph graph_from_json(const json& j, const std::string& path) {
  const int n = as_int(field(j, path, "n"), path + ".n");
  if (n < 0) throw SchemaError(path + ".n", "negative vertex count");
  std::vector<Vertex> vertices;
  if (j.contains("vertices")) {
    vertices = set_from_json(j["vertices"], path + ".vertices").members();
    if (static_cast<int>(vertices.size()) != n) throw SchemaError(path + ".vertices", "length differs from n");
  } else {
    for (int v = 0; v < n; ++v) vertices.push_back(v);
  }
  const std::string ep = path + ".edges";
  const json& list = as_array(field(j, path, "edges"), ep);
  std::vector<int> ids;
  if (j.contains("edge_ids")) {
    ids = int_list(j["edge_ids"], path + ".edge_ids");
    if (ids.size() != list.size()) throw SchemaError(path + ".edge_ids", "length differs from edges");
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) ids.push_back(static_cast<int>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = ep + "[" + std::to_string(i) + "]";
    std::vector<int> uv = int_list(list[i], at);
    if (uv.size() != 2) throw SchemaError(at, "expected two endpoints");
    edges.push_back({ids[i], uv[0], uv[1]});
  }
  try {
    return Graph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

json classification_to_json(const CutClassification& c) {
  json barriers = json::array();
  for (const BarrierWitness& w : c.barrier_witnesses) barriers.push_back(barrier_to_json(w));
  json seps = json::array();
  for (const TwoSeparation& s : c.twosep_witnesses) seps.push_back(twosep_to_json(s));
  return {{"tight", c.tight},
          {"trivial", c.trivial},
          {"elp", c.elp},
          {"barrier_witnesses", barriers},
          {"twosep_witnesses", seps}};
}

CutClassification classification_from_json(const json& j, const std::string& path) {
  CutClassification c;
  c.tight = as_bool(field(j, path, "tight"), path + ".tight");
  c.trivial = as_bool(field(j, path, "trivial"), path + ".trivial");
  c.elp = as_bool(field(j, path, "elp"), path + ".elp");
  const std::string bp = path + ".barrier_witnesses";
  const json& bs = as_array(field(j, path, "barrier_witnesses"), bp);
  for (std::size_t i = 0; i < bs.size(); ++i)
    c.barrier_witnesses.push_back(barrier_from_json(bs[i], bp + "[" + std::to_string(i) + "]"));
  const std::string sp = path + ".twosep_witnesses";
  const json& ss = as_array(field(j, path, "twosep_witnesses"), sp);
  for (std::size_t i = 0; i < ss.size(); ++i)
    c.twosep_witnesses.push_back(twosep_from_json(ss[i], sp + "[" + std::to_string(i) + "]"));
  return c;
}

json certificate_to_json(const DecompositionCertificate& cert) {
  json steps = json::array();
  for (const CertificateStep& st : cert.steps) {
    steps.push_back({{"graph", graph_to_json(st.graph)},
                     {"cut_shore", set_to_json(st.cut_shore)},
                     {"witness", witness_to_json(st.witness)},
                     {"contracted_shore", set_to_json(st.contracted_shore)},
                     {"new_vertex", st.new_vertex}});
  }
  return {{"input", {{"graph", graph_to_json(cert.input)}, {"cut_shore", set_to_json(cert.input_shore)}}},
          {"steps", steps},
          {"final",
           {{"graph", graph_to_json(cert.final_graph)},
            {"classification", classification_to_json(cert.final_classification)}}},
          {"r", cert.r}};
}

DecompositionCertificate certificate_from_json(const json& j) {
  DecompositionCertificate cert;
  const json& input = field(j, "$", "input");
  cert.input = graph_from_json(field(input, "$.input", "graph"), "$.input.graph");
  cert.input_shore = set_from_json(field(input, "$.input", "cut_shore"), "$.input.cut_shore");
  const json& steps = as_array(field(j, "$", "steps"), "$.steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = "$.steps[" + std::to_string(i) + "]";
    CertificateStep st;
    st.graph = graph_from_json(field(steps[i], p, "graph"), p + ".graph");
    st.cut_shore = set_from_json(field(steps[i], p, "cut_shore"), p + ".cut_shore");
    st.witness = witness_from_json(field(steps[i], p, "witness"), p + ".witness");
    st.contracted_shore = set_from_json(field(steps[i], p, "contracted_shore"), p + ".contracted_shore");
    st.new_vertex = as_int(field(steps[i], p, "new_vertex"), p + ".new_vertex");
    cert.steps.push_back(std::move(st));
  }
  const json& fin = field(j, "$", "final");
  cert.final_graph = graph_from_json(field(fin, "$.final", "graph"), "$.final.graph");
  cert.final_classification = classification_from_json(field(fin, "$.final", "classification"), "$.final.classification");
  cert.r = as_int(field(j, "$", "r"), "$.r");
  return cert;
}

}  // namespace tightcut
