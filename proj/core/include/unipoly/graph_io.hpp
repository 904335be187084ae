#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "unipoly/graph.hpp"

namespace unipoly {

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const PolytopeGraph& g);

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything else malformed throws
/// std::invalid_argument.
PolytopeGraph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u,v],...]}
nlohmann::json graph_to_json(const PolytopeGraph& g);
PolytopeGraph graph_from_json(const nlohmann::json& j);

}  // namespace unipoly
