#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cubesym/bitgraph.hpp"

namespace cubesym {

// graph6 as documented with nauty: size header followed by the upper
// triangle in column order, six bits per printable byte. No trailing newline.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// One "u v" line per edge (u < v), sorted.
std::string to_edgelist(const Graph& g);
// Reads "u v" lines; blank lines and lines starting with '#' are skipped.
Graph from_edgelist(std::string_view text, std::size_t vertex_count);

// {family, params, n_vertices, edges}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json family_params(const FamilySpec& spec);

}  // namespace cubesym
