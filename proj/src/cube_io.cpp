#include "orthantkit/cube_io.hpp"

#include <cstdlib>

#include "orthantkit/error.hpp"

namespace orthantkit::cube {

using nlohmann::json;

namespace {

json iso_to_json(const Isometry& iso) {
  json out = json::array();
  for (int j = 0; j < iso.dim(); ++j) {
    int target = iso.perm[j] + 1;
    out.push_back((iso.flips >> j) & 1u ? -target : target);
  }
  return out;
}

Isometry iso_from_json(const json& j) {
  Isometry iso;
  if (j.size() > Perm::kCapacity) throw InputError("isometry has too many coordinates");
  for (std::size_t k = 0; k < j.size(); ++k) {
    int v = j[k].get<int>();
    if (v == 0 || std::abs(v) > 32) throw InputError("isometry entries must be +-(coordinate + 1)");
    iso.perm.push_back(static_cast<std::uint8_t>(std::abs(v) - 1));
    if (v < 0) iso.flips |= 1u << k;
  }
  return iso;
}

const std::string& edge_name(const CubeComplex& x, std::size_t e) { return x.cube(1, e).name; }

json edge_end_json(const CubeComplex& x, EdgeEnd e) {
  return {{"edge", edge_name(x, e.edge)}, {"end", e.end == 0 ? "tail" : "head"}};
}

}  // namespace

json to_json(const CubeComplex& x) {
  json cubes = json::array();
  json gluings = json::array();
  for (int n = 0; n <= x.dimension(); ++n) {
    for (std::size_t i = 0; i < x.count(n); ++i) {
      const auto& c = x.cube(n, i);
      cubes.push_back({{"dim", n}, {"id", c.name}});
      for (int slot = 0; slot < 2 * n; ++slot) {
        const auto& g = c.faces[slot];
        if (!g) continue;
        gluings.push_back(
            {{"cube", c.name}, {"face", slot}, {"to", x.cube(n - 1, g->target).name}, {"iso", iso_to_json(g->iso)}});
      }
    }
  }
  json labels = json::object();
  for (const auto& [e, label] : x.labels()) labels[edge_name(x, e)] = label;
  json orientations = json::object();
  for (const auto& [e, sign] : x.orientations()) orientations[edge_name(x, e)] = sign;
  return {{"cubes", cubes}, {"gluings", gluings}, {"labels", labels}, {"orientations", orientations}};
}

CubeComplex complex_from_json(const json& doc) {
  CubeComplex x;
  try {
    if (!doc.is_object() || !doc.contains("cubes")) throw InputError("cube complex JSON needs a \"cubes\" array");
    for (const auto& c : doc.at("cubes")) x.add_cube(c.at("dim").get<int>(), c.at("id").get<std::string>());
    auto lookup = [&](const std::string& id) {
      auto ref = x.find(id);
      if (!ref) throw InputError("unknown cube id '" + id + "'");
      return *ref;
    };
    if (doc.contains("gluings")) {
      for (const auto& g : doc.at("gluings")) {
        auto from = lookup(g.at("cube").get<std::string>());
        auto to = lookup(g.at("to").get<std::string>());
        if (to.dim != from.dim - 1) throw InputError("gluing of '" + x.cube(from).name + "' targets the wrong dimension");
        x.glue(from.dim, from.index, g.at("face").get<int>(), to.index,
               iso_from_json(g.value("iso", json::array())));
      }
    }
    auto edge_of = [&](const std::string& id) {
      auto ref = lookup(id);
      if (ref.dim != 1) throw InputError("'" + id + "' is not an edge");
      return ref.index;
    };
    x.finalize();
    if (doc.contains("labels")) {
      for (const auto& [id, label] : doc.at("labels").items()) x.set_label(edge_of(id), label.get<std::string>());
    }
    if (doc.contains("orientations")) {
      for (const auto& [id, sign] : doc.at("orientations").items()) {
        int s = sign.get<int>();
        if (s != 1 && s != -1) throw InputError("orientation of '" + id + "' must be 1 or -1");
        x.set_orientation(edge_of(id), s);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid cube complex JSON: ") + e.what());
  }
  return x;
}

CubeComplex parse_complex(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(doc);
}

json to_json(const CubeComplex& x, const NpcReport& r) {
  json out = {{"npc", r.npc}};
  if (r.witness) {
    json simplex = json::array();
    for (auto e : r.witness->simplex) simplex.push_back(edge_end_json(x, e));
    out["witness"] = {{"vertex", x.cube(0, r.witness->vertex).name}, {"reason", r.witness->reason}, {"simplex", simplex}};
  }
  return out;
}

json to_json(const CubeComplex& x, const HyperplaneSet& h) {
  json out = json::array();
  for (const auto& hp : h.hyperplanes) {
    json edges = json::array();
    for (auto e : hp.edges) edges.push_back(edge_name(x, e));
    out.push_back({{"edges", edges}, {"twoSided", hp.twoSided}});
  }
  return out;
}

json to_json(const CubeComplex& x, const SpecialnessReport& r) {
  json out = to_json(x, NpcReport{r.npc, r.npcWitness});
  json si = json::array();
  for (const auto& w : r.selfIntersecting) si.push_back({{"hyperplane", w.hyperplane}, {"square", x.cube(2, w.square).name}});
  json so = json::array();
  for (const auto& w : r.selfOsculating) {
    so.push_back({{"hyperplane", w.hyperplane},
                  {"vertex", x.cube(0, w.vertex).name},
                  {"edges", {edge_name(x, w.edge1), edge_name(x, w.edge2)}}});
  }
  out["selfIntersecting"] = si;
  out["selfOsculating"] = so;
  out["oneSided"] = r.oneSided;
  out["weaklySpecial"] = r.weaklySpecial;
  return out;
}

}  // namespace orthantkit::cube
