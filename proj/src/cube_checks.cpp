#include "orthantkit/cube_checks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

namespace orthantkit::cube {

std::optional<std::uint32_t> VertexLink::index_of(EdgeEnd e) const {
  auto it = std::lower_bound(ends.begin(), ends.end(), e);
  if (it == ends.end() || *it != e) return std::nullopt;
  return static_cast<std::uint32_t>(it - ends.begin());
}

bool VertexLink::adjacent(std::uint32_t a, std::uint32_t b) const {
  return (adjacency_[a * words_ + b / 64] >> (b % 64)) & 1u;
}

bool VertexLink::is_simplex(const std::vector<std::uint32_t>& vertices) const {
  auto it = std::lower_bound(sorted_simplices_.begin(), sorted_simplices_.end(), vertices,
                             [this](const auto& ref, const auto& v) {
                               const auto& s = simplex_at(ref).vertices;
                               return std::lexicographical_compare(s.begin(), s.end(), v.begin(), v.end());
                             });
  if (it == sorted_simplices_.end()) return false;
  const auto& s = simplex_at(*it).vertices;
  return std::equal(s.begin(), s.end(), vertices.begin(), vertices.end());
}

const LinkSimplex* VertexLink::repeated_simplex() const {
  auto it = std::adjacent_find(sorted_simplices_.begin(), sorted_simplices_.end(), [this](const auto& a, const auto& b) {
    return simplex_at(a).vertices == simplex_at(b).vertices;
  });
  return it == sorted_simplices_.end() ? nullptr : &simplex_at(*it);
}

void VertexLink::build_index() {
  words_ = (ends.size() + 63) / 64;
  adjacency_.assign(ends.size() * words_, 0);
  sorted_simplices_.clear();
  for (std::uint32_t k = 0; k < simplices.size(); ++k) {
    for (std::uint32_t i = 0; i < simplices[k].size(); ++i) {
      const auto& s = simplices[k][i];
      if (s.degenerate) continue;
      sorted_simplices_.emplace_back(k, i);
      if (s.vertices.size() == 2) {
        auto a = s.vertices[0];
        auto b = s.vertices[1];
        adjacency_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        adjacency_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  std::sort(sorted_simplices_.begin(), sorted_simplices_.end(),
            [this](const auto& a, const auto& b) { return simplex_at(a).vertices < simplex_at(b).vertices; });
}

std::vector<VertexLink> all_vertex_links(const CubeComplex& x) {
  std::vector<VertexLink> links(x.count(0));
  for (std::size_t v = 0; v < links.size(); ++v) {
    links[v].vertex = v;
    links[v].simplices.resize(std::max(x.dimension(), 0));
  }
  // Position of each edge-end within its link; ends arrive in sorted order.
  std::vector<std::uint32_t> position(2 * x.count(1));
  for (std::size_t e = 0; e < x.count(1); ++e) {
    for (std::uint8_t end = 0; end < 2; ++end) {
      auto& ends = links[x.corner_vertex(1, e, end)].ends;
      position[2 * e + end] = static_cast<std::uint32_t>(ends.size());
      ends.push_back(EdgeEnd{e, end});
    }
  }
  for (int n = 1; n <= x.dimension(); ++n) {
    std::vector<std::size_t> sizes(links.size(), 0);
    for (std::size_t c = 0; c < x.count(n); ++c) {
      for (std::uint32_t corner = 0; corner < (1u << n); ++corner) ++sizes[x.corner_vertex(n, c, corner)];
    }
    for (std::size_t v = 0; v < links.size(); ++v) links[v].simplices[n - 1].reserve(sizes[v]);
    for (std::size_t c = 0; c < x.count(n); ++c) {
      for (std::uint32_t corner = 0; corner < (1u << n); ++corner) {
        auto& link = links[x.corner_vertex(n, c, corner)];
        LinkSimplex s{{}, CellRef{n, c}, corner, false};
        for (int axis = 0; axis < n; ++axis) {
          const auto end = x.corner_edge(n, c, corner, axis);
          s.vertices.push_back(position[2 * end.edge + end.end]);
        }
        std::sort(s.vertices.begin(), s.vertices.end());
        s.degenerate = std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end();
        link.simplices[n - 1].push_back(std::move(s));
      }
    }
  }
  for (auto& link : links) link.build_index();
  return links;
}

VertexLink vertex_link(const CubeComplex& x, std::size_t vertex) {
  VertexLink link;
  link.vertex = vertex;
  for (std::size_t e = 0; e < x.count(1); ++e) {
    for (std::uint8_t end = 0; end < 2; ++end) {
      if (x.corner_vertex(1, e, end) == vertex) link.ends.push_back(EdgeEnd{e, end});
    }
  }
  for (int n = 1; n <= x.dimension(); ++n) {
    std::vector<LinkSimplex> layer;
    for (std::size_t c = 0; c < x.count(n); ++c) {
      for (std::uint32_t corner = 0; corner < (1u << n); ++corner) {
        if (x.corner_vertex(n, c, corner) != vertex) continue;
        LinkSimplex s{{}, CellRef{n, c}, corner, false};
        for (int axis = 0; axis < n; ++axis) s.vertices.push_back(*link.index_of(x.corner_edge(n, c, corner, axis)));
        std::sort(s.vertices.begin(), s.vertices.end());
        s.degenerate = std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end();
        layer.push_back(std::move(s));
      }
    }
    link.simplices.push_back(std::move(layer));
  }
  link.build_index();
  return link;
}

namespace {

// Depth-first clique search in increasing vertex order; the first clique of
// minimum size that is not a simplex wins.
std::optional<std::vector<std::uint32_t>> smallest_empty_simplex(const VertexLink& link) {
  std::vector<std::uint32_t> clique;
  std::optional<std::vector<std::uint32_t>> best;
  struct Search {
    const VertexLink& link;
    std::uint32_t n;
    std::vector<std::uint32_t>& clique;
    std::optional<std::vector<std::uint32_t>>& best;
    void extend(std::uint32_t from) {
      for (std::uint32_t v = from; v < n; ++v) {
        if (!std::all_of(clique.begin(), clique.end(), [&](auto u) { return link.adjacent(u, v); })) continue;
        clique.push_back(v);
        if (clique.size() >= 3 && !link.is_simplex(clique)) {
          if (!best || clique.size() < best->size()) best = clique;
        } else if (!best || clique.size() + 1 < best->size()) {
          extend(v + 1);
        }
        clique.pop_back();
      }
    }
  };
  Search{link, static_cast<std::uint32_t>(link.size()), clique, best}.extend(0);
  return best;
}

// Same search with bitmasks, for links of at most 64 vertices.
std::optional<std::vector<std::uint32_t>> smallest_empty_simplex_small(const VertexLink& link) {
  const auto n = static_cast<std::uint32_t>(link.size());
  std::vector<std::uint64_t> nbrs(n, 0);
  std::vector<std::uint64_t> faces;
  for (const auto& layer : link.simplices) {
    for (const auto& s : layer) {
      std::uint64_t m = 0;
      for (auto v : s.vertices) m |= std::uint64_t{1} << v;
      if (s.vertices.size() == 2) {
        nbrs[s.vertices[0]] |= std::uint64_t{1} << s.vertices[1];
        nbrs[s.vertices[1]] |= std::uint64_t{1} << s.vertices[0];
      } else if (s.vertices.size() >= 3) {
        faces.push_back(m);
      }
    }
  }
  std::sort(faces.begin(), faces.end());
  std::uint64_t best = 0;
  int best_size = 0;
  struct Search {
    const std::vector<std::uint64_t>& nbrs;
    const std::vector<std::uint64_t>& faces;
    std::uint64_t& best;
    int& best_size;
    void extend(std::uint64_t clique, int size, std::uint64_t candidates) {
      for (; candidates; candidates &= candidates - 1) {
        const int v = std::countr_zero(candidates);
        const std::uint64_t next = clique | (std::uint64_t{1} << v);
        if (size + 1 >= 3 && !std::binary_search(faces.begin(), faces.end(), next)) {
          if (best_size == 0 || size + 1 < best_size) {
            best = next;
            best_size = size + 1;
          }
        } else if (best_size == 0 || size + 2 < best_size) {
          const std::uint64_t later = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
          extend(next, size + 1, candidates & nbrs[v] & later);
        }
      }
    }
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Search{nbrs, faces, best, best_size}.extend(0, 0, all);
  if (best_size == 0) return std::nullopt;
  std::vector<std::uint32_t> out;
  for (; best; best &= best - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(best)));
  return out;
}

}  // namespace

FlagCheck check_flag(const VertexLink& link) {
  FlagCheck out;
  for (const auto& layer : link.simplices) {
    for (const auto& s : layer) {
      if (s.degenerate) {
        out.simplicial = out.flag = false;
        out.reason = "degenerate simplex (a cube corner meets one edge-end twice)";
        out.witness = s.vertices.to_vector();
        return out;
      }
    }
  }
  if (const auto* s = link.repeated_simplex()) {
    out.simplicial = out.flag = false;
    out.reason = "two cube corners span the same link simplex";
    out.witness = s->vertices.to_vector();
    return out;
  }
  // Smallest clique of the 1-skeleton that spans no simplex.
  const auto n = static_cast<std::uint32_t>(link.size());
  auto best = n <= 64 ? smallest_empty_simplex_small(link) : smallest_empty_simplex(link);
  if (best) {
    out.flag = false;
    out.reason = "empty simplex: pairwise adjacent link vertices span no cube corner";
    out.witness = *best;
  }
  return out;
}

namespace {

NpcReport npc_from_links(const std::vector<VertexLink>& links) {
  NpcReport report;
  for (std::size_t v = 0; v < links.size(); ++v) {
    const auto& link = links[v];
    auto fc = check_flag(link);
    if (fc.simplicial && fc.flag) continue;
    NpcWitness w{v, fc.reason, {}};
    for (auto i : fc.witness) w.simplex.push_back(link.ends[i]);
    report.npc = false;
    report.witness = std::move(w);
    return report;
  }
  return report;
}

}  // namespace

NpcReport check_npc(const CubeComplex& x) { return npc_from_links(all_vertex_links(x)); }

namespace {

// Union-find carrying the parity of each edge relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0), broken_(n, false) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<std::size_t, int> find(std::size_t a) {
    int p = 0;
    std::size_t r = a;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // Path compression.
    int q = p;
    while (parent_[a] != a) {
      auto next = parent_[a];
      int pa = parity_[a];
      parent_[a] = r;
      parity_[a] = q;
      q ^= pa;
      a = next;
    }
    return {r, p};
  }

  void unite(std::size_t a, std::size_t b, int parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != parity) broken_[ra] = true;
      return;
    }
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ parity;
    broken_[ra] = broken_[ra] || broken_[rb];
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
  }

  bool broken(std::size_t root) const { return broken_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
  std::vector<bool> broken_;
};

struct ParallelPair {
  EdgeEnd first;
  EdgeEnd second;
};

// The two pairs of opposite edges of a square, as edge-ends on the x_axis = 0 side.
std::array<ParallelPair, 2> opposite_edges(const CubeComplex& x, std::size_t square) {
  return {ParallelPair{x.corner_edge(2, square, 0, 0), x.corner_edge(2, square, 2, 0)},
          ParallelPair{x.corner_edge(2, square, 0, 1), x.corner_edge(2, square, 1, 1)}};
}

}  // namespace

HyperplaneSet hyperplanes(const CubeComplex& x) {
  const auto edges = x.count(1);
  ParityUnionFind uf(edges);
  for (std::size_t s = 0; s < x.count(2); ++s) {
    for (const auto& p : opposite_edges(x, s)) uf.unite(p.first.edge, p.second.edge, p.first.end ^ p.second.end);
  }
  HyperplaneSet out;
  out.classOf.assign(edges, 0);
  std::vector<std::optional<std::size_t>> by_root(edges);
  std::vector<int> seed_parity;
  for (std::size_t e = 0; e < edges; ++e) {
    auto [root, parity] = uf.find(e);
    if (!by_root[root]) {
      by_root[root] = out.hyperplanes.size();
      out.hyperplanes.push_back(Hyperplane{{}, {}, !uf.broken(root)});
      seed_parity.push_back(parity);
    }
    auto h = *by_root[root];
    out.classOf[e] = h;
    out.hyperplanes[h].edges.push_back(e);
    out.hyperplanes[h].orientation.push_back(parity == seed_parity[h] ? 1 : -1);
  }
  return out;
}

std::vector<std::size_t> SpecialnessReport::self_intersecting_hyperplanes() const {
  std::set<std::size_t> hs;
  for (const auto& w : selfIntersecting) hs.insert(w.hyperplane);
  return {hs.begin(), hs.end()};
}

SpecialnessReport check_weakly_special(const CubeComplex& x) {
  SpecialnessReport report;
  const auto links = all_vertex_links(x);
  auto npc = npc_from_links(links);
  report.npc = npc.npc;
  report.npcWitness = npc.witness;

  auto hs = hyperplanes(x);
  for (std::size_t h = 0; h < hs.hyperplanes.size(); ++h) {
    if (!hs.hyperplanes[h].twoSided) report.oneSided.push_back(h);
  }
  for (std::size_t s = 0; s < x.count(2); ++s) {
    auto pairs = opposite_edges(x, s);
    auto h0 = hs.classOf[pairs[0].first.edge];
    if (h0 == hs.classOf[pairs[1].first.edge]) report.selfIntersecting.push_back(SelfIntersection{h0, s});
  }
  for (std::size_t v = 0; v < x.count(0); ++v) {
    const auto& link = links[v];
    std::set<std::tuple<std::size_t, std::size_t>> reported;
    for (std::uint32_t i = 0; i < link.size(); ++i) {
      for (std::uint32_t j = i + 1; j < link.size(); ++j) {
        auto e1 = link.ends[i].edge;
        auto e2 = link.ends[j].edge;
        if (e1 == e2 || hs.classOf[e1] != hs.classOf[e2] || link.adjacent(i, j)) continue;
        if (!reported.emplace(e1, e2).second) continue;
        report.selfOsculating.push_back(SelfOsculation{hs.classOf[e1], v, e1, e2});
      }
    }
  }
  report.weaklySpecial = report.npc && report.selfIntersecting.empty() && report.selfOsculating.empty();
  return report;
}

bool labels_match_hyperplanes(const CubeComplex& x, const HyperplaneSet& h) {
  const auto& labels = x.labels();
  if (labels.empty()) return true;
  if (labels.size() != x.count(1)) return false;
  for (std::size_t a = 0; a < x.count(1); ++a) {
    for (std::size_t b = a + 1; b < x.count(1); ++b) {
      if ((labels.at(a) == labels.at(b)) != (h.classOf[a] == h.classOf[b])) return false;
    }
  }
  return true;
}

bool orientations_consistent(const CubeComplex& x) {
  const auto& o = x.orientations();
  for (std::size_t s = 0; s < x.count(2); ++s) {
    for (const auto& p : opposite_edges(x, s)) {
      auto a = o.find(p.first.edge);
      auto b = o.find(p.second.edge);
      if (a == o.end() || b == o.end()) continue;
      int expected = (p.first.end ^ p.second.end) ? -1 : 1;
      if (a->second * b->second != expected) return false;
    }
  }
  return true;
}

}  // namespace orthantkit::cube
