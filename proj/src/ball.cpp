#include "orthantkit/ball.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "orthantkit/error.hpp"
#include "orthantkit/parallel.hpp"

namespace orthantkit::raag {

std::size_t projected_vertex_count(std::size_t rank, int radius) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (radius <= 0 || rank == 0) return 1;
  const std::size_t branch = 2 * rank - 1;
  std::size_t total = 1;
  std::size_t sphere = 2 * rank;
  for (int k = 1; k <= radius; ++k) {
    if (total > kMax - sphere) return kMax;
    total += sphere;
    if (k < radius) {
      if (sphere > kMax / branch) return kMax;
      sphere *= branch;
    }
  }
  return total;
}

namespace {

std::vector<Letter> letters_of(const Raag& r) {
  std::vector<Letter> out;
  for (std::size_t s = 0; s < r.rank(); ++s) {
    out.push_back(Letter{static_cast<std::uint16_t>(s), false});
    out.push_back(Letter{static_cast<std::uint16_t>(s), true});
  }
  return out;
}

Word cube_step(const Word& base, VertexSet clique, VertexSet negative, VertexSet subset) {
  Word w = base;
  for (auto s : graph::members(clique & subset)) {
    w.push_back(Letter{static_cast<std::uint16_t>(s), graph::contains(negative, s)});
  }
  return w;
}

}  // namespace

DevelopedBall DevelopedBall::develop(const Raag& r, int radius, std::size_t cap, const Word& center) {
  if (radius < 0) throw DomainError("radius must be non-negative");
  auto projected = projected_vertex_count(r.rank(), radius);
  if (projected > cap) {
    throw CapExceeded("development of radius " + std::to_string(radius) + " may reach " +
                      (projected == std::numeric_limits<std::size_t>::max() ? std::string("more than 2^64")
                                                                             : std::to_string(projected)) +
                      " vertices, above the cap of " + std::to_string(cap) + " (raise it with --cap)");
  }
  DevelopedBall b(r);
  b.radius_ = radius;
  b.center_ = r.canonicalize(center);
  b.vertices_.push_back(b.center_);
  b.depth_.push_back(0);
  b.index_.emplace(b.center_, 0);
  const auto letters = letters_of(r);

  std::size_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    const std::size_t layer_end = b.vertices_.size();
    std::vector<std::vector<Word>> found(layer_end - layer_begin);
    parallel_for(found.size(), [&](std::size_t k) {
      const auto& x = b.vertices_[layer_begin + k];
      for (auto l : letters) {
        auto y = r.multiply(x, Word{l});
        if (r.distance(b.center_, y) == static_cast<std::size_t>(d) + 1) found[k].push_back(std::move(y));
      }
    });
    for (auto& batch : found) {
      for (auto& y : batch) {
        if (b.index_.count(y)) continue;
        b.index_.emplace(y, b.vertices_.size());
        b.vertices_.push_back(std::move(y));
        b.depth_.push_back(static_cast<std::size_t>(d) + 1);
      }
    }
    layer_begin = layer_end;
  }

  // Edges x -> x*s, and cubes whose nearest corner is x.
  const auto cliques = graph::all_cliques(r.graph());
  std::vector<std::vector<BallEdge>> edges(b.size());
  std::vector<std::vector<BallCube>> cubes(b.size());
  parallel_for(b.size(), [&](std::size_t i) {
    const auto& x = b.vertices_[i];
    VertexSet outward_pos = 0;
    VertexSet outward_neg = 0;
    for (std::size_t s = 0; s < r.rank(); ++s) {
      for (bool inv : {false, true}) {
        auto y = r.multiply(x, Word{Letter{static_cast<std::uint16_t>(s), inv}});
        if (!inv) {
          if (auto j = b.find(y)) edges[i].push_back(BallEdge{i, *j, static_cast<std::uint16_t>(s)});
        }
        if (r.distance(b.center_, y) == b.depth_[i] + 1) (inv ? outward_neg : outward_pos) |= graph::bit(s);
      }
    }
    for (auto q : cliques) {
      const auto k = static_cast<std::size_t>(graph::popcount(q));
      if (k < 2 || b.depth_[i] + k > static_cast<std::size_t>(radius)) continue;
      // Each direction picks a sign that leads away from the center.
      auto dirs = graph::members(q);
      for (VertexSet pattern = 0; pattern < (VertexSet{1} << k); ++pattern) {
        VertexSet negative = 0;
        bool ok = true;
        for (std::size_t t = 0; t < k && ok; ++t) {
          bool neg = (pattern >> t) & 1u;
          ok = graph::contains(neg ? outward_neg : outward_pos, dirs[t]);
          if (neg) negative |= graph::bit(dirs[t]);
        }
        if (ok) cubes[i].push_back(BallCube{i, q, negative});
      }
    }
  });
  for (auto& e : edges) b.edges_.insert(b.edges_.end(), e.begin(), e.end());
  for (auto& c : cubes) b.cubes_.insert(b.cubes_.end(), c.begin(), c.end());

  std::vector<WallId> edge_walls(b.edges_.size());
  parallel_for(b.edges_.size(), [&](std::size_t e) {
    edge_walls[e] = wall_of_edge(r, b.vertices_[b.edges_[e].from], b.edges_[e].gen);
  });
  b.walls_ = edge_walls;
  std::sort(b.walls_.begin(), b.walls_.end());
  b.walls_.erase(std::unique(b.walls_.begin(), b.walls_.end()), b.walls_.end());
  for (const auto& w : edge_walls) {
    b.edge_wall_.push_back(
        static_cast<std::size_t>(std::lower_bound(b.walls_.begin(), b.walls_.end(), w) - b.walls_.begin()));
  }
  return b;
}

std::optional<std::size_t> DevelopedBall::find(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DevelopedBall::require(const Word& w) const {
  auto i = find(w);
  if (!i) {
    throw InsufficientRadius("vertex '" + raag_.format(w) + "' lies outside the ball of radius " +
                             std::to_string(radius_));
  }
  return *i;
}

std::size_t DevelopedBall::cube_count(int k) const {
  if (k == 0) return vertices_.size();
  if (k == 1) return edges_.size();
  return static_cast<std::size_t>(std::count_if(cubes_.begin(), cubes_.end(), [k](const BallCube& c) {
    return graph::popcount(c.clique) == k;
  }));
}

std::vector<Word> DevelopedBall::corners(const BallCube& c) const { return raag::corners(raag_, cube_at(c)); }

std::vector<Word> corners(const Raag& r, const CubeAt& c) {
  std::vector<Word> out;
  const auto k = graph::popcount(c.clique);
  auto dirs = graph::members(c.clique);
  for (VertexSet sub = 0; sub < (VertexSet{1} << k); ++sub) {
    VertexSet chosen = 0;
    for (int t = 0; t < k; ++t) {
      if ((sub >> t) & 1u) chosen |= graph::bit(dirs[t]);
    }
    out.push_back(r.canonicalize(cube_step(c.base, c.clique, c.negative, chosen)));
  }
  return out;
}

std::vector<Word> interval(const Raag& r, const Word& x, const Word& y) {
  const auto u = r.canonicalize(concat(inverse(x), y));
  // Prefixes of the trace u, each paired with the remaining suffix.
  std::map<Word, Word> seen{{Word{}, u}};
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& p : frontier) {
      const auto rest = seen.at(p);
      for (auto i : r.initial_positions(rest)) {
        auto q = r.canonicalize(concat(p, Word{rest[i]}));
        if (seen.count(q)) continue;
        Word remaining = rest;
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(i));
        seen.emplace(q, r.lex_normal(remaining));
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out;
  for (const auto& [p, rest] : seen) out.push_back(r.multiply(x, p));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_interval(const DevelopedBall& b, const Word& x, const Word& y) {
  for (const auto& z : interval(b.raag(), x, y)) b.require(z);
}

}  // namespace

Word median(const DevelopedBall& b, const Word& x0, const Word& y0, const Word& z0) {
  const auto& r = b.raag();
  auto x = r.canonicalize(x0);
  auto y = r.canonicalize(y0);
  auto z = r.canonicalize(z0);
  require_interval(b, x, y);
  require_interval(b, y, z);
  require_interval(b, x, z);
  auto ru = r.canonicalize(concat(inverse(x), y));
  auto rv = r.canonicalize(concat(inverse(x), z));
  Word m;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto i : r.initial_positions(ru)) {
      auto l = ru[i];
      auto pv = r.initial_positions(rv);
      auto j = std::find_if(pv.begin(), pv.end(), [&](std::size_t p) { return rv[p] == l; });
      if (j == pv.end()) continue;
      m.push_back(l);
      ru.erase(ru.begin() + static_cast<std::ptrdiff_t>(i));
      rv.erase(rv.begin() + static_cast<std::ptrdiff_t>(*j));
      grew = true;
      break;
    }
  }
  return r.multiply(x, m);
}

Word gate_projection(const DevelopedBall& b, const Word& x0, const StandardSubcomplex& c) {
  const auto& r = b.raag();
  auto x = r.canonicalize(x0);
  b.require(x);
  auto g = gate(r, x, c);
  require_interval(b, x, g);
  return g;
}

std::vector<std::size_t> vertices_in(const DevelopedBall& b, const StandardSubcomplex& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (contains(b.raag(), c, b.vertex(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> edges_in(const DevelopedBall& b, const StandardSubcomplex& c) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < b.edges().size(); ++e) {
    const auto& edge = b.edges()[e];
    if (graph::contains(c.subgraph, edge.gen) && contains(b.raag(), c, b.vertex(edge.from))) out.push_back(e);
  }
  return out;
}

CoarseIntersection coarse_intersection(const DevelopedBall& b, const StandardSubcomplex& c1,
                                       const StandardSubcomplex& c2) {
  const auto& r = b.raag();
  CoarseIntersection out;
  out.delta = subcomplex_distance(r, c1, c2);
  auto minimizers = [&](const StandardSubcomplex& from, const StandardSubcomplex& to) {
    std::vector<std::size_t> ys;
    for (auto i : vertices_in(b, from)) {
      if (r.distance(b.vertex(i), gate(r, b.vertex(i), to)) == out.delta) ys.push_back(i);
    }
    return ys;
  };
  out.y1 = minimizers(c1, c2);
  out.y2 = minimizers(c2, c1);
  if (out.y1.empty() || out.y2.empty()) {
    throw InsufficientRadius("no minimizing pair of " + format(r, c1) + " and " + format(r, c2) +
                             " lies in the ball of radius " + std::to_string(b.radius()));
  }
  return out;
}

std::vector<WallId> crossing_walls(const DevelopedBall& b, const Word& x, const Word& y) {
  const auto& r = b.raag();
  b.require(r.canonicalize(x));
  b.require(r.canonicalize(y));
  auto walls = walls_between(r, x, y);
  std::sort(walls.begin(), walls.end());
  return walls;
}

std::vector<WallId> crossing_walls(const DevelopedBall& b, const StandardSubcomplex& c) {
  std::set<WallId> walls;
  for (auto e : edges_in(b, c)) walls.insert(b.walls()[b.wall_of(e)]);
  return {walls.begin(), walls.end()};
}

WallIdentityReport check_wall_identity(const DevelopedBall& b, const StandardSubcomplex& c1,
                                       const StandardSubcomplex& c2, const CoarseIntersection& ci) {
  const auto& r = b.raag();
  WallIdentityReport report;
  std::set<WallId> both;
  std::set<WallId> on_y[2];
  auto fail = [&](std::string why) {
    if (report.holds) report.failure = std::move(why);
    report.holds = false;
  };
  auto in_minimizer = [&](const Word& y, const StandardSubcomplex& other) {
    return r.distance(y, gate(r, y, other)) == ci.delta;
  };
  const StandardSubcomplex* cs[2] = {&c1, &c2};
  for (int side = 0; side < 2; ++side) {
    const auto& self = *cs[side];
    const auto& other = *cs[1 - side];
    for (auto e : edges_in(b, self)) {
      const auto& edge = b.edges()[e];
      const auto& wall = b.walls()[b.wall_of(e)];
      const auto& x = b.vertex(edge.from);
      const auto& y = b.vertex(edge.to);
      const bool lies_in_minimizer = in_minimizer(x, other) && in_minimizer(y, other);
      if (lies_in_minimizer) {
        on_y[side].insert(wall);
        if (!crosses(r, wall, other)) {
          fail("edge of Y" + std::to_string(side + 1) + " at " + r.format(x) + " is dual to a wall missing " +
               format(r, other));
          continue;
        }
        // The gate onto the other subcomplex carries the edge to an edge of
        // the other minimizing set with the same wall.
        auto gx = gate(r, x, other);
        auto gy = gate(r, y, other);
        if (r.distance(gx, gy) != 1 || walls_between(r, gx, gy).front() != wall || !in_minimizer(gx, self)) {
          fail("gate image of the Y" + std::to_string(side + 1) + " edge at " + r.format(x) +
               " is not a parallel edge of the other minimizing set");
        }
      }
      if (!crosses(r, wall, other)) continue;
      both.insert(wall);
      auto px = gate(r, gate(r, x, other), self);
      auto py = gate(r, gate(r, y, other), self);
      if (r.distance(px, py) != 1 || walls_between(r, px, py).front() != wall || !in_minimizer(px, other) ||
          !in_minimizer(py, other)) {
        fail("wall " + format(r, wall) + " crosses both subcomplexes but has no dual edge in Y" +
             std::to_string(side + 1));
      }
    }
  }
  report.wallsBoth = both.size();
  report.wallsY1 = on_y[0].size();
  report.wallsY2 = on_y[1].size();
  return report;
}

GateBijectionReport check_gate_bijection(const DevelopedBall& b, const StandardSubcomplex& c1,
                                         const StandardSubcomplex& c2, const CoarseIntersection& ci) {
  const auto& r = b.raag();
  GateBijectionReport report;
  auto fail = [&](std::string why) {
    if (report.holds) report.failure = std::move(why);
    report.holds = false;
  };
  const std::vector<std::size_t>* ys[2] = {&ci.y1, &ci.y2};
  const StandardSubcomplex* cs[2] = {&c1, &c2};
  for (int side = 0; side < 2; ++side) {
    const auto& self = *cs[side];
    const auto& other = *cs[1 - side];
    std::vector<Word> images;
    for (auto i : *ys[side]) {
      const auto& y = b.vertex(i);
      auto g = gate(r, y, other);
      ++report.checked;
      if (r.distance(y, g) != ci.delta) fail("gate of " + r.format(y) + " is not at distance delta");
      if (gate(r, g, self) != y) fail("gates are not mutually inverse at " + r.format(y));
      if (auto j = b.find(g); j && !std::binary_search(ys[1 - side]->begin(), ys[1 - side]->end(), *j)) {
        fail("gate of " + r.format(y) + " misses the other minimizing set");
      }
      images.push_back(std::move(g));
    }
    const auto& src = *ys[side];
    for (std::size_t a = 0; a < src.size(); ++a) {
      for (std::size_t c = a + 1; c < src.size(); ++c) {
        if (r.distance(images[a], images[c]) != r.distance(b.vertex(src[a]), b.vertex(src[c]))) {
          fail("gate restricted to Y" + std::to_string(side + 1) + " is not an isometry");
        }
      }
    }
  }
  return report;
}

CubeAt parallel_transport_cube(const DevelopedBall& b, const CubeAt& cube, const Word& path) {
  const auto& r = b.raag();
  if (r.canonicalize(path).size() != path.size()) {
    throw DomainError("transport path '" + r.format(path) + "' is not a geodesic");
  }
  CubeAt cur{r.canonicalize(cube.base), cube.clique, cube.negative};
  for (const auto& c : corners(r, cur)) b.require(c);
  for (auto l : path) {
    if (graph::contains(cube.clique, l.gen) || (r.graph().neighbors(l.gen) & cube.clique) != cube.clique) {
      throw ObstructedTransport("step " + r.format(l) + " at " + r.format(cur.base) + " spans no cube with " +
                                r.graph().format_set(cube.clique));
    }
    cur.base = r.multiply(cur.base, Word{l});
    for (const auto& c : corners(r, cur)) b.require(c);
  }
  return cur;
}

}  // namespace orthantkit::raag
