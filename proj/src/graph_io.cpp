#include "orthantkit/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "orthantkit/error.hpp"

namespace orthantkit::graph {

namespace {

struct Position {
  std::size_t line;
  std::size_t column;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

}  // namespace

SimplicialGraph parse_graph_text(std::string_view text) {
  std::vector<VertexId> vertices;
  std::set<VertexId> seen;
  std::set<std::pair<VertexId, VertexId>> edge_set;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto declare = [&](const VertexId& v) {
    if (seen.insert(v).second) vertices.push_back(v);
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    start = end + 1;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::istringstream in(line);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(in), {}};
    if (tokens.size() > 2) {
      auto col = line.find(tokens[2]) + 1;
      throw InputError("expected 'u v' or 'u', found " + std::to_string(tokens.size()) + " tokens", line_no, col);
    }
    declare(tokens[0]);
    if (tokens.size() == 2) {
      auto col = line.find(tokens[1], line.find(tokens[0]) + tokens[0].size()) + 1;
      if (tokens[0] == tokens[1]) {
        throw InputError("self-loop at vertex '" + tokens[0] + "'", line_no, col);
      }
      auto key = std::minmax(tokens[0], tokens[1]);
      if (!edge_set.emplace(key.first, key.second).second) {
        throw InputError("duplicate edge '" + tokens[0] + " " + tokens[1] + "'", line_no, col);
      }
      declare(tokens[1]);
      edges.emplace_back(tokens[0], tokens[1]);
    }
    if (end == text.size()) break;
  }
  return SimplicialGraph::from_edges(std::move(vertices), edges);
}

SimplicialGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto pos = position_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("malformed JSON", pos.line, pos.column);
  }
  if (!doc.is_object()) throw InputError("graph JSON must be an object", 1, 1);

  std::vector<VertexId> vertices;
  std::set<VertexId> seen;
  auto declare = [&](const VertexId& v) {
    if (seen.insert(v).second) vertices.push_back(v);
  };
  try {
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) {
        auto id = v.get<std::string>();
        if (seen.count(id)) throw InputError("duplicate vertex '" + id + "'");
        declare(id);
      }
    }
    std::set<std::pair<VertexId, VertexId>> edge_set;
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (doc.contains("edges")) {
      std::size_t index = 0;
      for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw InputError("edge #" + std::to_string(index) + " must be a two-element array");
        }
        auto u = e[0].get<std::string>();
        auto v = e[1].get<std::string>();
        if (u == v) throw InputError("self-loop at vertex '" + u + "' (edge #" + std::to_string(index) + ")");
        auto key = std::minmax(u, v);
        if (!edge_set.emplace(key.first, key.second).second) {
          throw InputError("duplicate edge '" + u + " " + v + "' (edge #" + std::to_string(index) + ")");
        }
        declare(u);
        declare(v);
        edges.emplace_back(u, v);
        ++index;
      }
    }
    return SimplicialGraph::from_edges(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid graph JSON: ") + e.what());
  }
}

SimplicialGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? GraphFormat::Json : GraphFormat::Text;
  }
  return format == GraphFormat::Json ? parse_graph_json(text) : parse_graph_text(text);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::json to_json(const SimplicialGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({g.id(i), g.id(j)});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

std::string to_dot(const SimplicialGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (auto [i, j] : g.edges()) out << "  \"" << g.id(i) << "\" -- \"" << g.id(j) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orthantkit::graph
