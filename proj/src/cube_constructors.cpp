#include "orthantkit/cube_constructors.hpp"

#include <map>
#include <string>
#include <unordered_map>

#include "orthantkit/error.hpp"

namespace orthantkit::cube {

using graph::VertexSet;

CubeComplex salvetti(const graph::SimplicialGraph& g) {
  CubeComplex x;
  auto cliques = graph::all_cliques(g, /*include_empty=*/true);
  std::map<VertexSet, std::size_t> index;
  for (auto q : cliques) index[q] = x.add_cube(graph::popcount(q), g.format_set(q));
  for (auto q : cliques) {
    int k = graph::popcount(q);
    auto gens = graph::members(q);
    for (int i = 0; i < k; ++i) {
      auto facet = index.at(q & ~graph::bit(gens[i]));
      // Opposite facets of a k-torus cell are the same (k-1)-torus.
      x.glue(k, index.at(q), 2 * i, facet, Isometry::identity(k - 1));
      x.glue(k, index.at(q), 2 * i + 1, facet, Isometry::identity(k - 1));
    }
  }
  x.finalize();
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto e = index.at(graph::bit(v));
    x.set_label(e, g.id(v));
    x.set_orientation(e, 1);
  }
  return x;
}

namespace {

// Rank of `bits` among the submasks of `mask` in increasing order.
std::uint64_t compress(std::uint64_t bits, VertexSet mask) {
  std::uint64_t out = 0;
  int k = 0;
  for (; mask; mask &= mask - 1, ++k) {
    if (bits & mask & (~mask + 1)) out |= std::uint64_t{1} << k;
  }
  return out;
}

// Faces of [0,1]^n whose free-coordinate mask is listed, named by patterns
// over {0,1,*}. Free masks must be closed under subsets.
CubeComplex unit_cube_subcomplex(std::size_t n, const std::vector<VertexSet>& free_masks) {
  CubeComplex x;
  const VertexSet full = n == 64 ? ~VertexSet{0} : graph::bit(n) - 1;
  // First cell index of each free mask; its faces follow in submask order.
  std::unordered_map<VertexSet, std::size_t> first;
  auto pattern = [n](VertexSet free, std::uint64_t fixed_bits) {
    std::string p(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (graph::contains(free, i)) {
        p[i] = '*';
      } else if (graph::contains(fixed_bits, i)) {
        p[i] = '1';
      }
    }
    return p;
  };
  auto for_each_assignment = [full](VertexSet free, auto&& fn) {
    const VertexSet rest = full & ~free;
    std::uint64_t sub = 0;
    do {
      fn(sub);
      sub = (sub - rest) & rest;
    } while (sub != 0);
  };

  std::vector<std::size_t> per_dim;
  for (auto free : free_masks) {
    const auto k = static_cast<std::size_t>(graph::popcount(free));
    if (per_dim.size() <= k) per_dim.resize(k + 1, 0);
    per_dim[k] += std::size_t{1} << (n - k);
  }
  x.reserve(per_dim);
  for (auto free : free_masks) {
    const int k = graph::popcount(free);
    first[free] = x.count(k);
    for_each_assignment(free, [&](std::uint64_t bits) { x.add_cube(k, pattern(free, bits)); });
  }
  std::vector<Isometry> identities;
  for (auto free : free_masks) {
    const int k = graph::popcount(free);
    if (k == 0) continue;
    while (static_cast<int>(identities.size()) < k) {
      identities.push_back(Isometry::identity(static_cast<int>(identities.size())));
    }
    const auto coords = graph::members(free);
    const auto own = first.at(free);
    const VertexSet rest = full & ~free;
    std::vector<std::size_t> facet_first(k);
    for (int i = 0; i < k; ++i) facet_first[i] = first.at(free & ~graph::bit(coords[i]));
    for_each_assignment(free, [&](std::uint64_t bits) {
      const auto self = own + compress(bits, rest);
      for (int i = 0; i < k; ++i) {
        const VertexSet facet_rest = rest | graph::bit(coords[i]);
        for (std::uint64_t side = 0; side < 2; ++side) {
          const auto target = facet_first[i] + compress(bits | (side << coords[i]), facet_rest);
          x.glue(k, self, 2 * i + static_cast<int>(side), target, identities[k - 1]);
        }
      }
    });
  }
  x.finalize(/*check_corners=*/false);
  return x;
}

}  // namespace

CubeComplex davis_chamber(const graph::SimplicialGraph& g, std::size_t vertex_bound) {
  if (g.size() > vertex_bound) {
    throw CapExceeded("Davis chamber needs 2^" + std::to_string(g.size()) + " vertices; bound is " +
                      std::to_string(vertex_bound) + " graph vertices");
  }
  return unit_cube_subcomplex(g.size(), graph::all_cliques(g, /*include_empty=*/true));
}

std::size_t davis_cell_count(const graph::SimplicialGraph& g, int k) {
  std::size_t cliques = 0;
  for (auto q : graph::all_cliques(g, true)) {
    if (graph::popcount(q) == k) ++cliques;
  }
  return cliques << (g.size() - static_cast<std::size_t>(k));
}

namespace samples {

namespace {

std::vector<VertexSet> masks_up_to(int n, int max_free) {
  std::vector<VertexSet> out;
  for (int k = 0; k <= max_free; ++k) {
    for (VertexSet m = 0; m < (VertexSet{1} << n); ++m) {
      if (graph::popcount(m) == k) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

CubeComplex solid_cube(int n) { return unit_cube_subcomplex(static_cast<std::size_t>(n), masks_up_to(n, n)); }

CubeComplex hollow_cube() { return unit_cube_subcomplex(3, masks_up_to(3, 2)); }

CubeComplex klein_bottle() {
  CubeComplex x;
  auto v = x.add_cube(0, "v");
  auto a = x.add_cube(1, "a");
  auto b = x.add_cube(1, "b");
  auto s = x.add_cube(2, "s");
  for (auto e : {a, b}) {
    x.glue(1, e, 0, v, {});
    x.glue(1, e, 1, v, {});
  }
  // Walking the boundary from corner (0,0): bottom a, right b, top a
  // (traversed backwards, hence the reflection), left b^-1.
  Isometry reflect = Isometry::identity(1);
  reflect.flips = 1;
  x.glue(2, s, 0, b, Isometry::identity(1));
  x.glue(2, s, 1, b, Isometry::identity(1));
  x.glue(2, s, 2, a, Isometry::identity(1));
  x.glue(2, s, 3, a, reflect);
  x.finalize();
  x.set_label(a, "a");
  x.set_label(b, "b");
  return x;
}

}  // namespace samples

}  // namespace orthantkit::cube
