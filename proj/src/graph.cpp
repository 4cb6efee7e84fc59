#include "orthantkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "orthantkit/error.hpp"

namespace orthantkit::graph {

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

SimplicialGraph SimplicialGraph::from_edges(std::vector<VertexId> vertices,
                                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InputError("duplicate vertex '" + *std::adjacent_find(vertices.begin(), vertices.end()) + "'");
  }
  if (vertices.size() > kMaxVertices) {
    throw InputError("graph has " + std::to_string(vertices.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  SimplicialGraph g;
  g.ids_ = std::move(vertices);
  g.adj_.assign(g.ids_.size(), 0);
  for (const auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex '" + u + "'");
    auto i = g.index_of(u);
    auto j = g.index_of(v);
    if (g.adjacent(i, j)) throw InputError("duplicate edge '" + u + " " + v + "'");
    g.adj_[i] |= bit(j);
    g.adj_[j] |= bit(i);
  }
  return g;
}

SimplicialGraph SimplicialGraph::from_indices(std::size_t n,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = std::to_string(i);
    ids.push_back("v" + std::string(width - s.size(), '0') + s);
  }
  std::vector<std::pair<VertexId, VertexId>> named;
  for (auto [i, j] : edges) named.emplace_back(ids.at(i), ids.at(j));
  return from_edges(ids, named);
}

std::optional<std::size_t> SimplicialGraph::find(const VertexId& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t SimplicialGraph::index_of(const VertexId& id) const {
  auto i = find(id);
  if (!i) throw InputError("unknown vertex '" + id + "'");
  return *i;
}

std::size_t SimplicialGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto a : adj_) twice += popcount(a);
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimplicialGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto j : members(adj_[i] & ~(bit(i + 1) - 1))) out.emplace_back(i, j);
  }
  return out;
}

bool SimplicialGraph::is_clique(VertexSet s) const {
  for (auto i : members(s)) {
    if ((s & ~bit(i) & ~adj_[i]) != 0) return false;
  }
  return true;
}

SimplicialGraph SimplicialGraph::induced(VertexSet s) const {
  std::vector<VertexId> ids;
  for (auto i : members(s)) ids.push_back(ids_[i]);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto [i, j] : edges()) {
    if (contains(s, i) && contains(s, j)) es.emplace_back(ids_[i], ids_[j]);
  }
  return from_edges(std::move(ids), es);
}

std::string SimplicialGraph::format_set(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : members(s)) {
    if (!first) out += ",";
    out += ids_[i];
    first = false;
  }
  return out + "}";
}

SimplicialGraph complement_graph(const SimplicialGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!g.adjacent(i, j)) es.emplace_back(g.id(i), g.id(j));
    }
  }
  return SimplicialGraph::from_edges(g.vertices(), es);
}

std::vector<VertexSet> components(const SimplicialGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left) {
    VertexSet comp = left & (~left + 1);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (auto i : members(frontier)) next |= g.neighbors(i);
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const SimplicialGraph& g) { return components(g, g.all()).size() <= 1; }

SimplicialGraph join(const std::vector<SimplicialGraph>& parts) {
  std::vector<VertexId> ids;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& id : parts[p].vertices()) ids.push_back(id);
    for (auto [i, j] : parts[p].edges()) es.emplace_back(parts[p].id(i), parts[p].id(j));
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      for (const auto& u : parts[p].vertices()) {
        for (const auto& v : parts[q].vertices()) es.emplace_back(u, v);
      }
    }
  }
  return SimplicialGraph::from_edges(std::move(ids), es);
}

namespace {

// Enumerates cliques containing `current` extended by members of `candidates`
// (all greater than the max of current), calling visit on each.
void extend_cliques(const SimplicialGraph& g, VertexSet current, VertexSet candidates,
                    const std::function<void(VertexSet)>& visit) {
  visit(current);
  while (candidates) {
    auto i = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    extend_cliques(g, current | bit(i), candidates & g.neighbors(i), visit);
  }
}

int max_clique_from(const SimplicialGraph& g, int size, VertexSet candidates) {
  int best = size;
  while (candidates) {
    if (size + popcount(candidates) <= best) break;
    auto i = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    best = std::max(best, max_clique_from(g, size + 1, candidates & g.neighbors(i)));
  }
  return best;
}

}  // namespace

std::vector<VertexSet> all_cliques(const SimplicialGraph& g, bool include_empty) {
  std::vector<VertexSet> out;
  extend_cliques(g, 0, g.all(), [&](VertexSet c) {
    if (c != 0 || include_empty) out.push_back(c);
  });
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

int clique_number(const SimplicialGraph& g) { return max_clique_from(g, 0, g.all()); }

FlagComplex::FlagComplex(SimplicialGraph g) : base_(std::move(g)) {
  for (auto c : all_cliques(base_)) {
    auto k = static_cast<std::size_t>(popcount(c));
    if (by_dim_.size() < k) by_dim_.resize(k);
    by_dim_[k - 1].push_back(c);
  }
}

const std::vector<VertexSet>& FlagComplex::top_simplices() const {
  static const std::vector<VertexSet> kNone;
  return by_dim_.empty() ? kNone : by_dim_.back();
}

std::size_t FlagComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& layer : by_dim_) n += layer.size();
  return n;
}

FlagComplex flag_complex(const SimplicialGraph& g) { return FlagComplex(g); }

bool GalleryPath::valid() const {
  for (std::size_t i = 0; i + 1 < simplices.size(); ++i) {
    if (popcount(simplices[i] & simplices[i + 1]) < rank + 1) return false;
  }
  return !simplices.empty();
}

std::optional<GalleryPath> find_gallery(const FlagComplex& f, VertexSet from, VertexSet to, int rank) {
  const auto& top = f.top_simplices();
  auto pos = [&](VertexSet s) {
    auto it = std::lower_bound(top.begin(), top.end(), s);
    if (it == top.end() || *it != s) throw DomainError("not a top simplex: " + f.base().format_set(s));
    return static_cast<std::size_t>(it - top.begin());
  };
  auto src = pos(from);
  auto dst = pos(to);
  std::vector<std::size_t> parent(top.size(), top.size());
  parent[src] = src;
  std::deque<std::size_t> queue{src};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == dst) break;
    for (std::size_t nb = 0; nb < top.size(); ++nb) {
      if (parent[nb] == top.size() && popcount(top[cur] & top[nb]) >= rank + 1) {
        parent[nb] = cur;
        queue.push_back(nb);
      }
    }
  }
  if (parent[dst] == top.size()) return std::nullopt;
  GalleryPath path{{}, rank};
  for (auto cur = dst;; cur = parent[cur]) {
    path.simplices.push_back(top[cur]);
    if (cur == src) break;
  }
  std::reverse(path.simplices.begin(), path.simplices.end());
  return path;
}

PropertyReport property_pd(const SimplicialGraph& g, int d) {
  FlagComplex f(g);
  if (d < 1 || d > f.dimension() + 1) {
    throw DomainError("d = " + std::to_string(d) + " outside [1, " + std::to_string(f.dimension() + 1) + "]");
  }
  PropertyReport report;
  report.d = d;

  // Gallery condition: BFS from the first top simplex with share->=d adjacency.
  const auto& top = f.top_simplices();
  std::vector<bool> seen(top.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t nb = 0; nb < top.size(); ++nb) {
      if (!seen[nb] && popcount(top[cur] & top[nb]) >= d) {
        seen[nb] = true;
        queue.push_back(nb);
      }
    }
  }
  report.galleryCondition = true;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (!seen[i]) {
      report.galleryCondition = false;
      report.disconnectedPair = std::make_pair(top[0], top[i]);
      break;
    }
  }

  // Neighbour condition: each vertex has >= d neighbours in a common top simplex.
  report.neighborCondition = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool ok = std::any_of(top.begin(), top.end(),
                          [&](VertexSet s) { return popcount(s & g.neighbors(v)) >= d; });
    if (!ok) {
      report.neighborCondition = false;
      report.failingVertex = v;
      break;
    }
  }
  report.holds = report.galleryCondition && report.neighborCondition;
  return report;
}

JoinDecomposition join_decomposition(const SimplicialGraph& g) {
  JoinDecomposition jd;
  auto comp = complement_graph(g);
  for (auto c : components(comp, comp.all())) {
    if (popcount(c) == 1) {
      jd.cliqueFactor |= c;
    } else {
      jd.factors.push_back(c);
    }
  }
  return jd;
}

SimplicialGraph reconstruct_join(const SimplicialGraph& g, const JoinDecomposition& jd) {
  std::vector<SimplicialGraph> parts;
  for (auto f : jd.factors) parts.push_back(g.induced(f));
  for (auto v : members(jd.cliqueFactor)) parts.push_back(g.induced(bit(v)));
  return join(parts);
}

namespace {

bool hyperoctahedron_search(const SimplicialGraph& g, std::size_t k, VertexSet used,
                            std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (pairs.size() == k) return true;
  // Every vertex of a new pair must be adjacent to all vertices already chosen.
  VertexSet allowed = g.all() & ~used;
  for (auto v : members(used)) allowed &= g.neighbors(v);
  // Pairs are chosen with increasing first element to avoid permuted repeats.
  std::size_t min_first = pairs.empty() ? 0 : pairs.back().first + 1;
  for (auto u : members(allowed)) {
    if (u < min_first) continue;
    if (popcount(g.neighbors(u)) < static_cast<int>(2 * (k - 1))) continue;
    for (auto w : members(allowed & ~g.neighbors(u))) {
      if (w <= u) continue;
      pairs.emplace_back(u, w);
      if (hyperoctahedron_search(g, k, used | bit(u) | bit(w), pairs)) return true;
      pairs.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<Hyperoctahedron> find_top_hyperoctahedron(const SimplicialGraph& g) {
  auto k = static_cast<std::size_t>(clique_number(g));
  if (k == 0) return std::nullopt;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!hyperoctahedron_search(g, k, 0, pairs)) return std::nullopt;
  return Hyperoctahedron{pairs};
}

bool has_top_hyperoctahedron(const SimplicialGraph& g) { return find_top_hyperoctahedron(g).has_value(); }

SimplicialGraph simplex_intersection_graph(const FlagComplex& f, int d) {
  const auto& top = f.top_simplices();
  std::vector<VertexId> ids;
  for (auto s : top) ids.push_back(f.base().format_set(s));
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (popcount(top[i] & top[j]) >= d) es.emplace_back(ids[i], ids[j]);
    }
  }
  return SimplicialGraph::from_edges(std::move(ids), es);
}

}  // namespace orthantkit::graph
