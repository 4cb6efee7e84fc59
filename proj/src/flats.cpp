#include "orthantkit/flats.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "orthantkit/error.hpp"
#include "orthantkit/parallel.hpp"
#include "orthantkit/raag_io.hpp"

namespace orthantkit::flats {

using raag::Letter;
using raag::Word;

namespace {

std::vector<VertexSet> maximum_cliques(const graph::SimplicialGraph& g) {
  const auto top = graph::clique_number(g);
  std::vector<VertexSet> out;
  for (auto q : graph::all_cliques(g)) {
    if (graph::popcount(q) == top) out.push_back(q);
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool graph_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) return true;
  UnionFind uf(n);
  for (auto [a, b] : edges) uf.unite(a, b);
  for (std::size_t i = 1; i < n; ++i) {
    if (uf.find(i) != uf.find(0)) return false;
  }
  return true;
}

std::string node_name(const raag::Raag& r, const StandardSubcomplex& c) { return raag::format(r, c); }

}  // namespace

bool LocalFlatGraph::connected() const { return graph_connected(nodes.size(), edges); }

graph::SimplicialGraph LocalFlatGraph::as_graph(const raag::Raag& r) const {
  std::vector<graph::VertexId> ids;
  for (const auto& n : nodes) ids.push_back(node_name(r, n));
  std::vector<std::pair<graph::VertexId, graph::VertexId>> named;
  for (auto [a, b] : edges) named.emplace_back(ids[a], ids[b]);
  return graph::SimplicialGraph::from_edges(ids, named);
}

LocalFlatGraph LocalFlatGraph::through(const raag::Raag& r, const Word& x) const {
  LocalFlatGraph out;
  out.d = d;
  out.radius = radius;
  std::vector<std::optional<std::size_t>> remap(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!raag::contains(r, nodes[i], x)) continue;
    remap[i] = out.nodes.size();
    out.nodes.push_back(nodes[i]);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    if (remap[a] && remap[b]) {
      out.edges.emplace_back(*remap[a], *remap[b]);
      out.intersectionDim.push_back(intersectionDim[e]);
    }
  }
  return out;
}

LocalFlatGraph local_flat_graph(const graph::SimplicialGraph& g, int d) {
  if (d < 1) throw DomainError("d must be at least 1");
  if (g.empty()) throw DomainError("graph has no top simplex");
  LocalFlatGraph out;
  out.d = d;
  for (auto q : maximum_cliques(g)) out.nodes.push_back(StandardSubcomplex{{}, q});
  std::sort(out.nodes.begin(), out.nodes.end());
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.nodes.size(); ++j) {
      int shared = graph::popcount(out.nodes[i].subgraph & out.nodes[j].subgraph);
      if (shared >= d) {
        out.edges.emplace_back(i, j);
        out.intersectionDim.push_back(shared);
      }
    }
  }
  return out;
}

LocalFlatGraph ball_flat_graph(const raag::DevelopedBall& b, int d) {
  if (d < 1) throw DomainError("d must be at least 1");
  const auto& r = b.raag();
  const auto tops = maximum_cliques(r.graph());
  std::set<StandardSubcomplex> flats;
  for (const auto& x : b.vertices()) {
    for (auto q : tops) flats.insert(raag::standard_subcomplex(r, x, q));
  }
  LocalFlatGraph out;
  out.d = d;
  out.radius = b.radius();
  out.nodes.assign(flats.begin(), flats.end());

  std::vector<std::vector<std::size_t>> members(out.nodes.size());
  parallel_for(out.nodes.size(), [&](std::size_t i) { members[i] = raag::vertices_in(b, out.nodes[i]); });

  const auto n = out.nodes.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  // Per pair: -2 undecided, otherwise the intersection dimension.
  std::vector<int> dim(pairs.size(), -2);
  const auto reach = static_cast<std::size_t>(b.radius());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    const auto& c1 = out.nodes[i];
    const auto& c2 = out.nodes[j];
    const auto delta = raag::subcomplex_distance(r, c1, c2);
    std::vector<std::size_t> y1;
    for (auto v : members[i]) {
      if (r.distance(b.vertex(v), raag::gate(r, b.vertex(v), c2)) == delta) y1.push_back(v);
    }
    for (auto v : y1) {
      if (b.depth(v) + 1 > reach) continue;
      VertexSet labels = 0;
      for (auto s : graph::members(c1.subgraph)) {
        for (bool inv : {false, true}) {
          auto w = r.multiply(b.vertex(v), Word{Letter{static_cast<std::uint16_t>(s), inv}});
          auto k = b.find(w);
          if (k && std::binary_search(y1.begin(), y1.end(), *k)) labels |= graph::bit(s);
        }
      }
      dim[p] = graph::popcount(labels);
      return;
    }
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (dim[p] == -2) {
      ++out.undecided;
    } else if (dim[p] >= d) {
      out.edges.push_back(pairs[p]);
      out.intersectionDim.push_back(dim[p]);
    }
  }
  return out;
}

GsdReport gsd_connected(const graph::SimplicialGraph& g, int d) {
  const int top = graph::clique_number(g);
  if (d < 1 || d > top) {
    throw DomainError("d = " + std::to_string(d) + " is outside 1.." + std::to_string(top));
  }
  const auto tops = maximum_cliques(g);
  GsdReport out;
  UnionFind uf(tops.size());
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      if (graph::popcount(tops[i] & tops[j]) >= d) uf.unite(i, j);
    }
  }
  out.galleryCondition = true;
  for (std::size_t i = 1; i < tops.size(); ++i) out.galleryCondition = out.galleryCondition && uf.find(i) == uf.find(0);
  out.linkCondition = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto perp = g.neighbors(v);
    out.linkCondition = out.linkCondition && std::any_of(tops.begin(), tops.end(), [&](VertexSet q) {
                          return graph::popcount(q & perp) >= d;
                        });
  }
  out.connected = out.galleryCondition && out.linkCondition;
  return out;
}

namespace {

std::optional<std::vector<std::size_t>> hamiltonian_cycle(const graph::SimplicialGraph& h, std::size_t start) {
  const auto n = h.size();
  if (n < 3) return std::nullopt;
  std::vector<std::size_t> path{start};
  VertexSet used = graph::bit(start);
  std::size_t budget = 1000000;
  std::function<bool()> extend = [&]() -> bool {
    if (budget-- == 0) return false;
    auto last = path.back();
    if (path.size() == n) return h.adjacent(last, start);
    for (auto u : graph::members(h.neighbors(last) & ~used)) {
      path.push_back(u);
      used |= graph::bit(u);
      if (extend()) return true;
      used &= ~graph::bit(u);
      path.pop_back();
    }
    return false;
  };
  if (!extend()) return std::nullopt;
  path.push_back(start);
  return path;
}

std::vector<std::size_t> doubling_walk(const graph::SimplicialGraph& h, std::size_t start) {
  std::vector<std::size_t> walk;
  VertexSet seen = graph::bit(start);
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    walk.push_back(v);
    for (auto u : graph::members(h.neighbors(v))) {
      if (graph::contains(seen, u)) continue;
      seen |= graph::bit(u);
      dfs(u);
      walk.push_back(v);
    }
  };
  dfs(start);
  return walk;
}

// Elements of G(clique) of length <= radius.
std::vector<Word> clique_ball(VertexSet clique, int radius) {
  std::vector<Word> out;
  auto gens = graph::members(clique);
  Word cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == gens.size()) {
      out.push_back(cur);
      return;
    }
    for (int k = -left; k <= left; ++k) {
      auto size = cur.size();
      for (int t = 0; t < std::abs(k); ++t) cur.push_back(Letter{static_cast<std::uint16_t>(gens[i]), k < 0});
      rec(i + 1, left - std::abs(k));
      cur.resize(size);
    }
  };
  rec(0, radius);
  return out;
}

}  // namespace

std::optional<WitnessReport> join_witness(const graph::SimplicialGraph& g, int radius) {
  if (g.size() < 2) throw DomainError("join witness needs at least two vertices");
  const auto comp = graph::complement_graph(g);
  if (!graph::is_connected(comp)) return std::nullopt;
  const raag::Raag r(g);
  const auto tops = maximum_cliques(g);
  const VertexSet in_all = std::accumulate(tops.begin(), tops.end(), g.all(), std::bit_and<VertexSet>());
  const auto outside = graph::members(g.all() & ~in_all);
  const std::size_t start = outside.front();

  WitnessReport w;
  if (auto cycle = hamiltonian_cycle(comp, start)) {
    w.walk = *cycle;
    w.hamiltonian = true;
  } else {
    w.walk = doubling_walk(comp, start);
  }
  for (std::size_t i = 0; i + 1 < w.walk.size(); ++i) w.W.push_back(Letter{static_cast<std::uint16_t>(w.walk[i]), false});
  for (int k = 0; k < 8; ++k) w.Wprime = raag::concat(w.Wprime, w.W);

  const auto canonical = r.canonicalize(w.Wprime);
  w.geodesicVerified = canonical.size() == w.Wprime.size();
  w.consecutiveNonCommuting = true;
  for (std::size_t i = 0; i + 1 < w.Wprime.size(); ++i) {
    w.consecutiveNonCommuting = w.consecutiveNonCommuting && !r.commute(w.Wprime[i].gen, w.Wprime[i + 1].gen);
  }

  const VertexSet ends = graph::bit(w.W.front().gen) | graph::bit(w.W.back().gen);
  auto avoiding = [&](VertexSet bad) -> std::optional<VertexSet> {
    for (auto q : tops) {
      if (!(q & bad)) return q;
    }
    return std::nullopt;
  };
  const VertexSet delta = avoiding(ends).value_or(*avoiding(graph::bit(start)));
  w.F1 = raag::standard_subcomplex(r, {}, delta);
  w.F2 = raag::standard_subcomplex(r, canonical, delta);

  w.verificationRadius = radius;
  const auto window = clique_ball(delta, radius);
  const auto walls = raag::walls_between(r, {}, canonical);
  std::vector<Word> near1;
  std::vector<Word> near2;
  for (const auto& z : window) {
    near1.push_back(r.canonicalize(z));
    near2.push_back(r.multiply(canonical, z));
  }
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const auto& h = walls[i];
    bool ok = !raag::crosses(r, h, w.F1) && !raag::crosses(r, h, w.F2);
    const bool side1 = raag::upper_side(r, h, {});
    const bool side2 = raag::upper_side(r, h, canonical);
    ok = ok && side1 != side2;
    for (std::size_t k = 0; ok && k < window.size(); ++k) {
      ok = raag::upper_side(r, h, near1[k]) == side1 && raag::upper_side(r, h, near2[k]) == side2;
    }
    if (!ok) w.nonSeparatingWalls.push_back(i + 1);
  }
  w.separationVerified = w.nonSeparatingWalls.empty();
  return w;
}

std::string to_string(G1Class c) { return c == G1Class::AtMost2 ? "AtMost2" : "Infinite"; }

Classification g1_classifier(const graph::SimplicialGraph& g, int radius) {
  if (g.empty()) throw DomainError("classifier needs a nonempty graph");
  Classification out;
  if (g.size() == 1 || graph::join_decomposition(g).part_count() >= 2) return out;
  out.verdict = G1Class::Infinite;
  out.witness = join_witness(g, radius);
  return out;
}

nlohmann::json to_json(const raag::Raag& r, const LocalFlatGraph& f) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : f.nodes) nodes.push_back(raag::to_json(r, n));
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    edges.push_back({{"nodes", {f.edges[e].first, f.edges[e].second}}, {"intersectionDim", f.intersectionDim[e]}});
  }
  nlohmann::json out = {{"d", f.d}, {"nodes", nodes}, {"edges", edges}, {"connected", f.connected()}};
  if (f.radius >= 0) {
    out["radius"] = f.radius;
    out["undecidedPairs"] = f.undecided;
  }
  return out;
}

nlohmann::json to_json(const raag::Raag& r, const WitnessReport& w) {
  nlohmann::json walk = nlohmann::json::array();
  for (auto v : w.walk) walk.push_back(r.graph().id(v));
  return {{"walk", walk},
          {"hamiltonian", w.hamiltonian},
          {"W", r.format(w.W)},
          {"Wprime", r.format(w.Wprime)},
          {"lengthW", w.W.size()},
          {"lengthWprime", w.Wprime.size()},
          {"geodesicVerified", w.geodesicVerified},
          {"consecutiveNonCommuting", w.consecutiveNonCommuting},
          {"separationVerified", w.separationVerified},
          {"nonSeparatingWalls", w.nonSeparatingWalls},
          {"verificationRadius", w.verificationRadius},
          {"flats", {raag::to_json(r, w.F1), raag::to_json(r, w.F2)}}};
}

nlohmann::json to_json(const raag::Raag& r, const Classification& c) {
  nlohmann::json out = {{"g1", to_string(c.verdict)}};
  if (c.witness) out["witness"] = to_json(r, *c.witness);
  return out;
}

nlohmann::json to_json(const GsdReport& g) {
  return {{"connected", g.connected}, {"galleryCondition", g.galleryCondition}, {"linkCondition", g.linkCondition}};
}

std::string to_dot(const raag::Raag& r, const LocalFlatGraph& f) {
  std::ostringstream out;
  out << "graph flats {\n";
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"(" << r.format(f.nodes[i].cosetRep) << ", "
        << r.graph().format_set(f.nodes[i].subgraph) << ")\"];\n";
  }
  for (auto [a, b] : f.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orthantkit::flats
