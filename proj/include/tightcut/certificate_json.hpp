#pragma once

#include <json.hpp>

#include "tightcut/decompose.hpp"

namespace tightcut {

// Graph objects are {"n": int, "edges": [[u, v], ...]}. Graphs whose vertex
// ids are not 0..n-1 or whose edge ids are not 0..m-1 (every contracted
// graph) also carry "vertices" and "edge_ids"; readers default both when
// absent.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json classification_to_json(const CutClassification& c);
CutClassification classification_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json certificate_to_json(const DecompositionCertificate& cert);
// Throws SchemaError naming the JSON path of the first violation.
DecompositionCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace tightcut
