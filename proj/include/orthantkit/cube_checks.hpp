#pragma once

// Links, hyperplanes and the weakly-special verifier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthantkit/cube_complex.hpp"

namespace orthantkit::cube {

/// A link simplex: the corner of a cube at the link's vertex. Its vertices
/// are the edge-ends of the cube's edges at that corner.
struct LinkSimplex {
  InlineVec<std::uint32_t, 24> vertices;  // sorted indices into VertexLink::ends
  CellRef cell;
  std::uint32_t corner = 0;
  bool degenerate = false;  // two coordinate edges gave the same edge-end
};

/// Combinatorial link of a vertex. Link vertices are edge-ends at the vertex,
/// so a loop contributes two link vertices. simplices[k] holds the corners of
/// (k+1)-cubes.
class VertexLink {
 public:
  std::size_t vertex = 0;
  std::vector<EdgeEnd> ends;
  std::vector<std::vector<LinkSimplex>> simplices;

  std::size_t size() const { return ends.size(); }
  std::optional<std::uint32_t> index_of(EdgeEnd e) const;
  bool adjacent(std::uint32_t a, std::uint32_t b) const;
  /// Whether a vertex set (sorted) is spanned by some link simplex.
  bool is_simplex(const std::vector<std::uint32_t>& vertices) const;
  std::size_t simplex_count(int k) const {
    return k >= 0 && k < static_cast<int>(simplices.size()) ? simplices[k].size() : 0;
  }

  /// A non-degenerate simplex spanned by two different cube corners, if any.
  const LinkSimplex* repeated_simplex() const;
  void build_index();

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;  // words_ per link vertex
  const LinkSimplex& simplex_at(const std::pair<std::uint32_t, std::uint32_t>& ref) const {
    return simplices[ref.first][ref.second];
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> sorted_simplices_;
};

VertexLink vertex_link(const CubeComplex& x, std::size_t vertex);
std::vector<VertexLink> all_vertex_links(const CubeComplex& x);

/// Whether a link is a simplicial flag complex. On failure `witness` holds
/// an offending vertex set: a degenerate or repeated simplex, or a clique of
/// the link's 1-skeleton that spans no simplex.
struct FlagCheck {
  bool simplicial = true;
  bool flag = true;
  std::string reason;
  std::vector<std::uint32_t> witness;
};

FlagCheck check_flag(const VertexLink& link);

struct NpcWitness {
  std::size_t vertex = 0;
  std::string reason;
  std::vector<EdgeEnd> simplex;
};

struct NpcReport {
  bool npc = true;
  std::optional<NpcWitness> witness;
};

/// Gromov's link condition at every vertex.
NpcReport check_npc(const CubeComplex& x);

struct Hyperplane {
  std::vector<std::size_t> edges;  // sorted edge indices
  /// Edge direction relative to the class seed (lowest edge id); meaningful
  /// only when twoSided.
  std::vector<int> orientation;
  bool twoSided = true;
};

struct HyperplaneSet {
  std::vector<Hyperplane> hyperplanes;  // ordered by lowest edge id
  std::vector<std::size_t> classOf;     // edge index -> hyperplane index
};

/// Partition of edges by the transitive closure of "opposite in a square",
/// with two-sidedness decided by orientation propagation from the lowest edge.
HyperplaneSet hyperplanes(const CubeComplex& x);

struct SelfIntersection {
  std::size_t hyperplane = 0;
  std::size_t square = 0;
};

struct SelfOsculation {
  std::size_t hyperplane = 0;
  std::size_t vertex = 0;
  std::size_t edge1 = 0;
  std::size_t edge2 = 0;
};

struct SpecialnessReport {
  bool npc = true;
  std::optional<NpcWitness> npcWitness;
  std::vector<SelfIntersection> selfIntersecting;
  std::vector<SelfOsculation> selfOsculating;
  std::vector<std::size_t> oneSided;
  bool weaklySpecial = true;

  /// Distinct hyperplanes among the self-intersection witnesses.
  std::vector<std::size_t> self_intersecting_hyperplanes() const;
};

/// Non-positive curvature plus absence of self-intersecting and
/// self-osculating hyperplanes. One-sided hyperplanes are reported but do not
/// affect weaklySpecial.
SpecialnessReport check_weakly_special(const CubeComplex& x);

/// Labels, when present on every edge, are equal exactly on hyperplane classes.
bool labels_match_hyperplanes(const CubeComplex& x, const HyperplaneSet& h);
/// Orientations, when present, agree with square parallelism.
bool orientations_consistent(const CubeComplex& x);

}  // namespace orthantkit::cube
