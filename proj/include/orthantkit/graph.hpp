#pragma once

// Defining graphs, their flag complexes, and the purely graph-level
// invariants (galleries, property P_d, join decompositions, hyperoctahedra).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthantkit::graph {

using VertexId = std::string;

/// Vertex subset of a graph as a bitmask over vertex indices.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(std::size_t i) { return VertexSet{1} << i; }
inline bool contains(VertexSet s, std::size_t i) { return (s >> i) & 1u; }

/// Indices of the set bits in ascending order.
std::vector<std::size_t> members(VertexSet s);

/// Finite simplicial graph. Vertices are kept sorted by id; indices refer to
/// that order, so every derived output is deterministic.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Validates and builds. Throws InputError on self-loops, duplicate edges,
  /// duplicate vertices, unknown endpoints, or more than kMaxVertices vertices.
  static SimplicialGraph from_edges(std::vector<VertexId> vertices,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// Builds from vertex count and index pairs; vertex ids are "v0", "v1", ...
  /// zero-padded so that lexicographic and numeric order agree.
  static SimplicialGraph from_indices(std::size_t n,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<VertexId>& vertices() const { return ids_; }
  const VertexId& id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> find(const VertexId& id) const;
  std::size_t index_of(const VertexId& id) const;  // throws InputError

  bool adjacent(std::size_t i, std::size_t j) const { return contains(adj_[i], j); }
  VertexSet neighbors(std::size_t i) const { return adj_[i]; }
  VertexSet all() const { return size() == 64 ? ~VertexSet{0} : bit(size()) - 1; }
  std::size_t edge_count() const;

  /// Edges as index pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  bool is_clique(VertexSet s) const;
  /// Full subgraph on the given vertices (ids preserved).
  SimplicialGraph induced(VertexSet s) const;
  std::string format_set(VertexSet s) const;  // "{a,b}"

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<VertexSet> adj_;
};

/// Same vertices, complementary edge set.
SimplicialGraph complement_graph(const SimplicialGraph& g);

/// Connected components of the full subgraph on `within`, ordered by least member.
std::vector<VertexSet> components(const SimplicialGraph& g, VertexSet within);
bool is_connected(const SimplicialGraph& g);

/// Join of graphs with pairwise disjoint vertex ids.
SimplicialGraph join(const std::vector<SimplicialGraph>& parts);

/// Clique number (size of a largest clique); 0 for the empty graph.
int clique_number(const SimplicialGraph& g);

/// Flag complex of a graph: all cliques, graded by dimension.
class FlagComplex {
 public:
  explicit FlagComplex(SimplicialGraph g);

  const SimplicialGraph& base() const { return base_; }
  /// Max clique size minus one; -1 for the empty graph.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of dimension k (cliques of size k+1), sorted.
  const std::vector<VertexSet>& simplices(int k) const { return by_dim_.at(k); }
  const std::vector<VertexSet>& top_simplices() const;
  std::size_t simplex_count() const;

 private:
  SimplicialGraph base_;
  std::vector<std::vector<VertexSet>> by_dim_;
};

FlagComplex flag_complex(const SimplicialGraph& g);

/// All cliques of g (including the empty clique when include_empty), in
/// ascending (size, mask) order.
std::vector<VertexSet> all_cliques(const SimplicialGraph& g, bool include_empty = false);

/// Sequence of top simplices in which consecutive members share >= rank+1 vertices.
struct GalleryPath {
  std::vector<VertexSet> simplices;
  int rank = 0;

  bool valid() const;
};

/// Shortest k-gallery between two top simplices, if one exists.
std::optional<GalleryPath> find_gallery(const FlagComplex& f, VertexSet from, VertexSet to, int rank);

struct PropertyReport {
  int d = 0;
  bool holds = false;
  bool galleryCondition = false;
  bool neighborCondition = false;
  /// Set when the gallery condition fails: two top simplices with no (d-1)-gallery.
  std::optional<std::pair<VertexSet, VertexSet>> disconnectedPair;
  /// Set when the neighbour condition fails.
  std::optional<std::size_t> failingVertex;
};

/// Property P_d: every pair of top simplices is joined by a (d-1)-gallery, and
/// every vertex sees >= d of its neighbours inside some top simplex.
/// Throws DomainError unless 1 <= d <= dim F(g) + 1.
PropertyReport property_pd(const SimplicialGraph& g, int d);

/// Join decomposition: complement components. Singleton components (vertices
/// adjacent to everything else) are pooled into the clique factor.
struct JoinDecomposition {
  VertexSet cliqueFactor = 0;
  std::vector<VertexSet> factors;

  /// Number of join factors; every clique-factor vertex is its own factor.
  std::size_t part_count() const {
    return factors.size() + static_cast<std::size_t>(popcount(cliqueFactor));
  }
};

JoinDecomposition join_decomposition(const SimplicialGraph& g);

/// Rebuilds the join of the parts of a decomposition (each clique vertex as its
/// own one-vertex part).
SimplicialGraph reconstruct_join(const SimplicialGraph& g, const JoinDecomposition& jd);

/// A top-dimensional hyperoctahedron: k pairs of non-adjacent vertices whose
/// union induces their k-fold join, where k = clique number.
struct Hyperoctahedron {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

std::optional<Hyperoctahedron> find_top_hyperoctahedron(const SimplicialGraph& g);
bool has_top_hyperoctahedron(const SimplicialGraph& g);

/// Graph whose vertices are the top simplices of f, adjacent when they share
/// >= d vertices. Vertex ids are the simplices formatted as "{a,b}".
SimplicialGraph simplex_intersection_graph(const FlagComplex& f, int d);

}  // namespace orthantkit::graph
