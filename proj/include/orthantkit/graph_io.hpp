#pragma once

#include <string>
#include <string_view>

#include "orthantkit/graph.hpp"
#include "vendor_json.hpp"

namespace orthantkit::graph {

enum class GraphFormat { Auto, Text, Json };

/// Edge-list text: one "u v" pair per line, a lone "u" declares an isolated
/// vertex, lines starting with '#' and blank lines are ignored.
SimplicialGraph parse_graph_text(std::string_view text);

/// JSON object {"vertices":[...], "edges":[[u,v],...]}. Edge endpoints not
/// listed under "vertices" are added implicitly.
SimplicialGraph parse_graph_json(std::string_view text);

/// Auto picks JSON when the first non-blank character is '{'.
SimplicialGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Reads a file, or stdin when path is "-". Throws InputError.
std::string read_input(const std::string& path);

nlohmann::json to_json(const SimplicialGraph& g);
std::string to_dot(const SimplicialGraph& g, const std::string& name = "G");

}  // namespace orthantkit::graph
