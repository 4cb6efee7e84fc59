#pragma once

#include <cstddef>

#include "orthantkit/cube_complex.hpp"
#include "orthantkit/graph.hpp"

namespace orthantkit::cube {

/// Salvetti complex of a graph: one vertex, one labelled and oriented loop
/// edge per graph vertex, one k-torus per k-clique. Cells are named after
/// their clique, e.g. "{}", "{a}", "{a,b}".
CubeComplex salvetti(const graph::SimplicialGraph& g);

inline constexpr std::size_t kDefaultDavisBound = 16;

/// Davis chamber: the faces of the unit cube [0,1]^V whose free coordinates
/// form a clique (the empty clique included). Cells are named by a pattern
/// over the vertices in order, '0'/'1' for fixed and '*' for free coordinates.
/// Throws CapExceeded when |V| exceeds `vertex_bound`.
CubeComplex davis_chamber(const graph::SimplicialGraph& g, std::size_t vertex_bound = kDefaultDavisBound);

/// Closed-form Davis chamber cell count in dimension k: (#k-cliques) * 2^(|V|-k).
std::size_t davis_cell_count(const graph::SimplicialGraph& g, int k);

/// Small reference complexes.
namespace samples {

/// A single solid n-cube with all its faces.
CubeComplex solid_cube(int n);
/// The surface of the 3-cube: 8 vertices, 12 edges, 6 squares.
CubeComplex hollow_cube();
/// One vertex, edges a and b, one square with attaching word a b a b^-1.
CubeComplex klein_bottle();

}  // namespace samples

}  // namespace orthantkit::cube
