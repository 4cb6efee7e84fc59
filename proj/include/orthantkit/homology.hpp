#pragma once

// Cellular chain complexes over Z/2 of finite cube complexes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthantkit/cube_checks.hpp"
#include "orthantkit/cube_complex.hpp"
#include "vendor_json.hpp"

namespace orthantkit::homology {

/// Bit vector packed 64 entries per word.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool v = true) {
    auto mask = std::uint64_t{1} << (i % 64);
    words_[i / 64] = v ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o);
  bool any() const;
  std::size_t count() const;
  /// Lowest set index, or size() when zero.
  std::size_t first() const;
  std::vector<std::size_t> ones() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Matrix over Z/2 stored by columns.
struct GF2Matrix {
  std::size_t rows = 0;
  std::vector<BitVector> columns;

  std::size_t cols() const { return columns.size(); }
  bool entry(std::size_t r, std::size_t c) const { return columns[c].get(r); }
  BitVector apply(const BitVector& v) const;
  bool is_zero() const;
};

/// boundary[k] maps k-chains to (k-1)-chains; boundary[0] is empty (0 rows).
struct GF2ChainComplex {
  std::vector<std::size_t> counts;
  std::vector<GF2Matrix> boundary;

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
  /// Whether every composite of consecutive boundary maps vanishes.
  bool is_chain_complex() const;
};

/// Entry (f, c) is the parity of the number of facets of c glued to f.
GF2ChainComplex boundary_matrices(const cube::CubeComplex& x);

/// Rank over Z/2 by packed elimination.
std::size_t rank(const GF2Matrix& m);

/// Basis of ker(boundary of top dimension) in reduced row echelon form, each
/// vector indexed by top cells. Pivots are taken in ascending cell order.
std::vector<BitVector> top_cycle_basis(const GF2ChainComplex& c);

struct SupportSet {
  BitVector cycle;
  /// cells[k] = sorted k-cells in the closure of the cycle's top cells.
  std::vector<std::vector<std::size_t>> cells;

  bool empty() const { return !cycle.any(); }
};

/// Throws DomainError when z is not a top cycle.
SupportSet support_set(const cube::CubeComplex& x, const GF2ChainComplex& c, const BitVector& z);

struct LinkSupportReport {
  bool holds = true;
  /// The chain of top link simplices at corners of support cubes is a cycle.
  bool inducedIsCycle = true;
  std::size_t linkOfSupport = 0;     // simplices in the link of the support set
  std::size_t supportOfInduced = 0;  // simplices in the closure of the induced cycle
};

/// Compares the link of v in the support set of z with the support of the
/// top cycle that z induces on the link of v, computed on the link itself.
LinkSupportReport link_support_check(const cube::CubeComplex& x, const BitVector& z, std::size_t v);

/// Link vertices spanned by the corners at v of the support cells of z.
std::vector<std::uint32_t> link_of_support(const cube::CubeComplex& x, const cube::VertexLink& link,
                                           const SupportSet& s);

struct AntipodeReport {
  bool pass = true;
  struct Entry {
    std::uint32_t vertex = 0;
    std::optional<std::uint32_t> antipode;  // least non-adjacent support vertex
  };
  std::vector<Entry> entries;
};

/// For each support vertex, looks for another support vertex not adjacent to
/// it (at distance pi in the all-right link). Throws FlagPreconditionFailed
/// when the link is not a flag simplicial complex.
AntipodeReport vertex_antipode_check(const cube::VertexLink& link, const std::vector<std::uint32_t>& support);

/// Type of a cell barycenter direction: the dimension of its carrying cell.
struct DeltaModType {
  int cellDimension = 0;
  friend bool operator==(const DeltaModType&, const DeltaModType&) = default;
};

DeltaModType theta(int cell_dimension);
DeltaModType theta(const cube::LinkSimplex& s);
/// Image under the embedding of the k-dimensional model simplex into the
/// `ambient`-dimensional one. Throws DomainError when ambient < type.
DeltaModType embed(DeltaModType t, int ambient);

/// One "row col" pair per nonzero entry, column-major.
std::string to_triplets(const GF2Matrix& m);

nlohmann::json chain_json(const cube::CubeComplex& x, int dim, const BitVector& v);
nlohmann::json to_json(const cube::CubeComplex& x, const SupportSet& s);

}  // namespace orthantkit::homology
