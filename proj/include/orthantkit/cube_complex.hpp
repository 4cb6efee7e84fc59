#pragma once

// Finite cube complexes stored by explicit face gluings, so that loops,
// tori and other non-embedded cells are representable.
//
// Conventions. An n-cube is [0,1]^n with coordinates 0..n-1. Face slot
// 2*i + s is the facet {x_i = s}; its own coordinates are the remaining ones
// in increasing order. A gluing sends a facet onto an (n-1)-cube through an
// Isometry. Corners are bitmasks: bit j is the value of coordinate j. An edge
// (1-cube) runs from its tail (slot 0, x = 0) to its head (slot 1, x = 1).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthantkit/inline_vec.hpp"

namespace orthantkit::cube {

/// Combinatorial isometry between cubes of the same dimension. Source
/// coordinate j lands on target coordinate perm[j], reflected when bit j of
/// flips is set.
using Perm = InlineVec<std::uint8_t, 32>;

struct Isometry {
  Perm perm;
  std::uint32_t flips = 0;

  static Isometry identity(int n);
  int dim() const { return static_cast<int>(perm.size()); }
  bool valid() const;
  std::uint32_t apply(std::uint32_t corner) const;

  friend bool operator==(const Isometry&, const Isometry&) = default;
};

struct FaceGluing {
  std::size_t target = 0;
  Isometry iso;
};

struct Cube {
  std::string name;
  int dim = 0;
  std::vector<std::optional<FaceGluing>> faces;  // 2*dim slots
};

struct CellRef {
  int dim = 0;
  std::size_t index = 0;
  friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

/// One end of an edge: end 0 is the tail, end 1 the head.
struct EdgeEnd {
  std::size_t edge = 0;
  std::uint8_t end = 0;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// A face of a cube resolved down to an actual cell. `iso` maps the free
/// coordinates of the face (in increasing order) onto the cell's coordinates.
struct FaceRef {
  std::size_t cell = 0;
  Isometry iso;
};

class CubeComplex {
 public:
  /// Appends an n-cube with unset face slots; returns its index within dim n.
  std::size_t add_cube(int dim, std::string name);
  /// Preallocates room for `per_dim[k]` k-cubes.
  void reserve(const std::vector<std::size_t>& per_dim);
  void glue(int dim, std::size_t cube, int slot, std::size_t target, Isometry iso);

  /// Validates gluings (every slot set, correct dimensions, codimension-2
  /// corners agree) and builds the corner tables. Throws MalformedComplex.
  /// Constructors whose gluings agree by design may skip the codimension-2
  /// pass.
  void finalize(bool check_corners = true);
  bool finalized() const { return finalized_; }

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int dim) const;
  std::vector<std::size_t> counts() const;
  const Cube& cube(int dim, std::size_t i) const { return cells_.at(dim).at(i); }
  const Cube& cube(CellRef c) const { return cube(c.dim, c.index); }
  std::optional<CellRef> find(const std::string& name) const;

  /// Vertex (0-cube index) at a corner of a cube.
  std::size_t corner_vertex(int dim, std::size_t cube, std::uint32_t corner) const;
  /// The edge-end at `corner` of the edge running along coordinate `axis`.
  EdgeEnd corner_edge(int dim, std::size_t cube, std::uint32_t corner, int axis) const;

  /// Face of a cube obtained by fixing the coordinates in fixed_mask to the
  /// corresponding bits of values, descending in increasing coordinate order.
  FaceRef face(int dim, std::size_t cube, std::uint32_t fixed_mask, std::uint32_t values) const;
  /// Same, descending through the fixed coordinates in the given order.
  FaceRef face_in_order(int dim, std::size_t cube, const std::vector<int>& order, std::uint32_t values) const;

  std::size_t edge_tail(std::size_t edge) const { return corner_vertex(1, edge, 0); }
  std::size_t edge_head(std::size_t edge) const { return corner_vertex(1, edge, 1); }

  void set_label(std::size_t edge, std::string label) { labels_[edge] = std::move(label); }
  void set_orientation(std::size_t edge, int sign) { orientations_[edge] = sign >= 0 ? 1 : -1; }
  const std::map<std::size_t, std::string>& labels() const { return labels_; }
  const std::map<std::size_t, int>& orientations() const { return orientations_; }

 private:
  void require_finalized() const;

  std::vector<std::vector<Cube>> cells_;
  std::unordered_map<std::string, CellRef> by_name_;
  // corners_[dim][cube * 2^dim + corner] = vertex index
  std::vector<std::vector<std::size_t>> corners_;
  // corner_edges_[dim][(cube * 2^dim + corner) * dim + axis]
  std::vector<std::vector<EdgeEnd>> corner_edges_;
  std::map<std::size_t, std::string> labels_;
  std::map<std::size_t, int> orientations_;
  bool finalized_ = false;
};

inline std::size_t CubeComplex::corner_vertex(int dim, std::size_t cube, std::uint32_t corner) const {
  if (!finalized_) require_finalized();
  if (dim < 0 || dim >= static_cast<int>(cells_.size()) || cube >= cells_[dim].size() || corner >= (1u << dim)) {
    throw std::out_of_range("corner_vertex");
  }
  return corners_[dim][(cube << dim) + corner];
}

inline EdgeEnd CubeComplex::corner_edge(int dim, std::size_t cube, std::uint32_t corner, int axis) const {
  if (!finalized_) require_finalized();
  if (dim < 1 || dim >= static_cast<int>(cells_.size()) || cube >= cells_[dim].size() || corner >= (1u << dim) ||
      axis < 0 || axis >= dim) {
    throw std::out_of_range("corner_edge");
  }
  return corner_edges_[dim][((cube << dim) + corner) * dim + axis];
}

}  // namespace orthantkit::cube
