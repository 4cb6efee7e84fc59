#include "orthantkit/raag_io.hpp"

#include "orthantkit/error.hpp"

namespace orthantkit::raag {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

json word_list(const Raag& r, const DevelopedBall& b, const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (auto i : ids) out.push_back(r.format(b.vertex(i)));
  return out;
}

json gens_json(const Raag& r, VertexSet s) {
  json out = json::array();
  for (auto i : graph::members(s)) out.push_back(r.graph().id(i));
  return out;
}

}  // namespace

StandardSubcomplex parse_subcomplex(const Raag& r, std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) throw InputError("subcomplex must be written word@gen,gen,...");
  auto h = r.parse(text.substr(0, at));
  VertexSet gens = 0;
  auto list = text.substr(at + 1);
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    auto name = trim(list.substr(start, comma - start));
    if (!name.empty()) gens |= graph::bit(r.graph().index_of(name));
    start = comma + 1;
  }
  return standard_subcomplex(r, r.canonicalize(h), gens);
}

PeriodicRay parse_ray(const Raag& r, std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto bar = text.find('|', start);
    parts.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (parts.size() > 3) throw InputError("ray must be period, prefix|period or base|prefix|period");
  PeriodicRay ray;
  ray.period = r.parse(parts.back());
  if (parts.size() >= 2) ray.prefix = r.parse(parts[parts.size() - 2]);
  if (parts.size() == 3) ray.base = r.canonicalize(r.parse(parts[0]));
  if (ray.period.empty()) throw InputError("ray period must be nonempty");
  return ray;
}

json to_json(const Raag& r, const StandardSubcomplex& c) {
  return {{"cosetRep", r.format(c.cosetRep)}, {"subgraph", gens_json(r, c.subgraph)}};
}

json to_json(const Raag& r, const WallId& w) { return {{"gen", r.graph().id(w.gen)}, {"rep", r.format(w.rep)}}; }

json to_json(const Raag& r, const CubeAt& c) {
  std::string signs;
  for (auto s : graph::members(c.clique)) signs += graph::contains(c.negative, s) ? '-' : '+';
  return {{"base", r.format(c.base)}, {"clique", gens_json(r, c.clique)}, {"signs", signs}};
}

json to_json(const DevelopedBall& b) {
  const auto& r = b.raag();
  json vertices = json::array();
  for (const auto& v : b.vertices()) vertices.push_back(r.format(v));
  json edges = json::array();
  for (std::size_t e = 0; e < b.edges().size(); ++e) {
    const auto& edge = b.edges()[e];
    edges.push_back({{"from", edge.from}, {"to", edge.to}, {"gen", r.graph().id(edge.gen)}, {"wall", b.wall_of(e)}});
  }
  json cubes = json::array();
  for (const auto& c : b.cubes()) cubes.push_back(to_json(r, b.cube_at(c)));
  json walls = json::array();
  for (const auto& w : b.walls()) walls.push_back(to_json(r, w));
  json counts = json::array();
  for (int k = 0; k <= graph::clique_number(r.graph()); ++k) counts.push_back(b.cube_count(k));
  return {{"center", r.format(b.center())}, {"radius", b.radius()}, {"counts", counts}, {"vertices", vertices},
          {"edges", edges},  {"cubes", cubes},        {"walls", walls}};
}

json to_json(const Raag& r, const PeriodicRay& ray) {
  return {{"base", r.format(ray.base)}, {"prefix", r.format(ray.prefix)}, {"period", r.format(ray.period)}};
}

json to_json(const Raag& r, const MirrorLine& line) {
  return {{"base", r.format(line.base)},
          {"prefix", r.format(line.prefix)},
          {"period", r.format(line.period)},
          {"bidirectional", true},
          {"verifiedHorizon", line.verifiedHorizon}};
}

json to_json(const DevelopedBall& b, const Orthant& o) {
  const auto& r = b.raag();
  json rays = json::array();
  for (std::size_t i = 0; i < o.dimension(); ++i) {
    rays.push_back({{"period", r.format(o.periods[i])}, {"kind", o.lines[i] ? "line" : "ray"}});
  }
  json points = json::array();
  for (const auto& p : o.points) points.push_back({{"coords", p.coords}, {"vertex", r.format(b.vertex(p.vertex))}});
  return {{"base", r.format(o.start)}, {"rays", rays}, {"radius", b.radius()}, {"points", points}};
}

json to_json(const DevelopedBall& b, const CoarseIntersection& ci) {
  const auto& r = b.raag();
  return {{"delta", ci.delta}, {"Y1", word_list(r, b, ci.y1)}, {"Y2", word_list(r, b, ci.y2)}, {"radius", b.radius()}};
}

}  // namespace orthantkit::raag
