#pragma once

// Finite developments of X(G), the universal cover of the Salvetti complex,
// and the median, gate, wall and coarse-intersection queries on them.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthantkit/raag.hpp"

namespace orthantkit::raag {

inline constexpr std::size_t kDefaultCap = 200000;

/// Upper bound for the number of vertices within distance R: the ball size
/// in the free group of the same rank, 1 + 2n * sum_{k<R} (2n-1)^k.
/// Saturates at SIZE_MAX.
std::size_t projected_vertex_count(std::size_t rank, int radius);

/// Edge from `from` to `to` = from * gen.
struct BallEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::uint16_t gen = 0;
};

/// A cube of X(G): corners base * prod_{s in clique} s^(+-1), with the sign of
/// s negative when s is in `negative`.
struct CubeAt {
  Word base;
  VertexSet clique = 0;
  VertexSet negative = 0;

  friend auto operator<=>(const CubeAt&, const CubeAt&) = default;
};

/// A cube of a ball, keyed by its corner nearest the center.
struct BallCube {
  std::size_t base = 0;
  VertexSet clique = 0;
  VertexSet negative = 0;
};

class DevelopedBall {
 public:
  /// Breadth-first development of all vertices within `radius` of `center`.
  /// Throws CapExceeded when projected_vertex_count exceeds `cap`.
  static DevelopedBall develop(const Raag& r, int radius, std::size_t cap = kDefaultCap, const Word& center = {});

  const Raag& raag() const { return raag_; }
  int radius() const { return radius_; }
  const Word& center() const { return center_; }

  const std::vector<Word>& vertices() const { return vertices_; }
  const Word& vertex(std::size_t i) const { return vertices_[i]; }
  std::size_t size() const { return vertices_.size(); }
  /// Index of a canonical word, if it lies in the ball.
  std::optional<std::size_t> find(const Word& w) const;
  bool contains(const Word& w) const { return find(w).has_value(); }
  /// Like find, but throws InsufficientRadius.
  std::size_t require(const Word& w) const;
  /// Distance from the center.
  std::size_t depth(std::size_t i) const { return depth_[i]; }

  const std::vector<BallEdge>& edges() const { return edges_; }
  /// Cubes of dimension >= 2.
  const std::vector<BallCube>& cubes() const { return cubes_; }
  /// Number of k-cubes (k = 0 vertices, k = 1 edges).
  std::size_t cube_count(int k) const;
  std::vector<Word> corners(const BallCube& c) const;
  CubeAt cube_at(const BallCube& c) const { return CubeAt{vertices_[c.base], c.clique, c.negative}; }

  /// Distinct walls dual to edges of the ball, sorted.
  const std::vector<WallId>& walls() const { return walls_; }
  /// Index into walls() of the wall dual to an edge.
  std::size_t wall_of(std::size_t edge) const { return edge_wall_[edge]; }

 private:
  DevelopedBall(const Raag& r) : raag_(r) {}

  Raag raag_;
  int radius_ = 0;
  Word center_;
  std::vector<Word> vertices_;
  std::vector<std::size_t> depth_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<BallEdge> edges_;
  std::vector<BallCube> cubes_;
  std::vector<WallId> walls_;
  std::vector<std::size_t> edge_wall_;
};

/// Corners of a cube.
std::vector<Word> corners(const Raag& r, const CubeAt& c);

/// All vertices on geodesics from x to y.
std::vector<Word> interval(const Raag& r, const Word& x, const Word& y);

/// The unique vertex lying on geodesics between each pair of x, y, z.
/// Throws InsufficientRadius when one of the three intervals leaves the ball.
Word median(const DevelopedBall& b, const Word& x, const Word& y, const Word& z);

/// Nearest vertex of C to x. Throws InsufficientRadius unless every geodesic
/// from x to its gate lies in the ball.
Word gate_projection(const DevelopedBall& b, const Word& x, const StandardSubcomplex& c);

/// Ball vertices (indices) lying in C.
std::vector<std::size_t> vertices_in(const DevelopedBall& b, const StandardSubcomplex& c);
/// Ball edges (indices) lying in C.
std::vector<std::size_t> edges_in(const DevelopedBall& b, const StandardSubcomplex& c);

struct CoarseIntersection {
  std::size_t delta = 0;
  std::vector<std::size_t> y1;  // ball vertices of C1 at distance delta from C2
  std::vector<std::size_t> y2;
};

/// Minimal distance between C1 and C2 and the ball parts of the minimizing
/// sets. Throws InsufficientRadius when either minimizing set misses the ball.
CoarseIntersection coarse_intersection(const DevelopedBall& b, const StandardSubcomplex& c1,
                                       const StandardSubcomplex& c2);

/// Walls separating x and y. Throws InsufficientRadius when x or y is outside.
std::vector<WallId> crossing_walls(const DevelopedBall& b, const Word& x, const Word& y);
/// Walls dual to edges of C inside the ball.
std::vector<WallId> crossing_walls(const DevelopedBall& b, const StandardSubcomplex& c);

/// Walls crossing both subcomplexes versus walls dual to edges of Y1 and Y2.
struct WallIdentityReport {
  bool holds = true;
  std::size_t wallsBoth = 0;
  std::size_t wallsY1 = 0;
  std::size_t wallsY2 = 0;
  std::string failure;
};

/// Checks, for every ball edge of C1 (resp. C2) whose wall crosses the other
/// subcomplex, that the gate composite sends it to an edge of Y1 (resp. Y2)
/// dual to the same wall; and that every edge of Y1 and Y2 in the ball is
/// dual to a wall crossing both and is carried by the gates to an edge of
/// the other minimizing set with that wall.
WallIdentityReport check_wall_identity(const DevelopedBall& b, const StandardSubcomplex& c1,
                                       const StandardSubcomplex& c2, const CoarseIntersection& ci);

struct GateBijectionReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string failure;
};

/// Gates restrict to mutually inverse isometries Y1 <-> Y2 at distance delta.
GateBijectionReport check_gate_bijection(const DevelopedBall& b, const StandardSubcomplex& c1,
                                         const StandardSubcomplex& c2, const CoarseIntersection& ci);

/// Moves a cube along a geodesic edge path from its base, one square at a
/// time. Throws ObstructedTransport when a step does not commute with the
/// cube's directions and InsufficientRadius when a transported corner leaves
/// the ball.
CubeAt parallel_transport_cube(const DevelopedBall& b, const CubeAt& cube, const Word& path);

}  // namespace orthantkit::raag
