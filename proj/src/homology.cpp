#include "orthantkit/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "orthantkit/error.hpp"

namespace orthantkit::homology {

BitVector& BitVector::operator^=(const BitVector& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w; w &= w - 1) out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

BitVector GF2Matrix::apply(const BitVector& v) const {
  BitVector out(rows);
  for (auto c : v.ones()) out ^= columns[c];
  return out;
}

bool GF2Matrix::is_zero() const {
  return std::none_of(columns.begin(), columns.end(), [](const BitVector& c) { return c.any(); });
}

bool GF2ChainComplex::is_chain_complex() const {
  for (std::size_t k = 2; k < boundary.size(); ++k) {
    for (const auto& col : boundary[k].columns) {
      if (boundary[k - 1].apply(col).any()) return false;
    }
  }
  return true;
}

GF2ChainComplex boundary_matrices(const cube::CubeComplex& x) {
  GF2ChainComplex c;
  for (int k = 0; k <= x.dimension(); ++k) c.counts.push_back(x.count(k));
  c.boundary.resize(c.counts.size());
  if (!c.counts.empty()) c.boundary[0].columns.assign(c.counts[0], BitVector(0));
  for (int k = 1; k <= x.dimension(); ++k) {
    auto& m = c.boundary[k];
    m.rows = c.counts[k - 1];
    for (std::size_t i = 0; i < c.counts[k]; ++i) {
      BitVector col(m.rows);
      for (const auto& g : x.cube(k, i).faces) col.flip(g->target);
      m.columns.push_back(std::move(col));
    }
  }
  return c;
}

namespace {

// Row-reduces `rows` (pivoting in ascending column order) and returns the
// pivot column of each surviving row; `companions` undergo the same row
// operations.
std::vector<std::size_t> eliminate(std::vector<BitVector>& rows, std::vector<BitVector>* companions) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].get(col)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    if (companions) std::swap((*companions)[rank], (*companions)[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) {
        rows[r] ^= rows[rank];
        if (companions) (*companions)[r] ^= (*companions)[rank];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const GF2Matrix& m) {
  auto rows = m.columns;
  return eliminate(rows, nullptr).size();
}

std::vector<BitVector> top_cycle_basis(const GF2ChainComplex& c) {
  if (c.counts.empty()) return {};
  const auto top = static_cast<std::size_t>(c.dimension());
  const auto n = c.counts[top];
  std::vector<BitVector> kernel;
  if (top == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      BitVector v(n);
      v.set(i);
      kernel.push_back(std::move(v));
    }
    return kernel;
  }
  // Rows are top cells: their boundaries, augmented by the identity.
  auto rows = c.boundary[top].columns;
  std::vector<BitVector> combos;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector v(n);
    v.set(i);
    combos.push_back(std::move(v));
  }
  auto r = eliminate(rows, &combos).size();
  kernel.assign(combos.begin() + static_cast<std::ptrdiff_t>(r), combos.end());
  eliminate(kernel, nullptr);
  return kernel;
}

SupportSet support_set(const cube::CubeComplex& x, const GF2ChainComplex& c, const BitVector& z) {
  const int top = c.dimension();
  if (top < 0 || z.size() != c.counts[top]) throw DomainError("chain has the wrong length for the top dimension");
  if (top > 0 && c.boundary[top].apply(z).any()) throw DomainError("chain is not a cycle");
  std::vector<std::set<std::size_t>> cells(top + 1);
  for (auto cell : z.ones()) {
    cells[top].insert(cell);
    for (std::uint32_t mask = 1; mask < (1u << top); ++mask) {
      const int fixed = std::popcount(mask);
      for (std::uint32_t values = 0; values < (1u << top); ++values) {
        if (values & ~mask) continue;
        cells[top - fixed].insert(x.face(top, cell, mask, values).cell);
      }
    }
  }
  SupportSet s{z, {}};
  for (const auto& layer : cells) s.cells.emplace_back(layer.begin(), layer.end());
  return s;
}

namespace {

using Simplex = std::vector<std::uint32_t>;

void close_downward(std::set<Simplex>& out, const Simplex& s) {
  if (s.empty() || !out.insert(s).second) return;
  if (s.size() == 1) return;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
    close_downward(out, face);
  }
}

}  // namespace

LinkSupportReport link_support_check(const cube::CubeComplex& x, const BitVector& z, std::size_t v) {
  const auto chains = boundary_matrices(x);
  const auto support = support_set(x, chains, z);
  const auto link = cube::vertex_link(x, v);
  const int top = x.dimension();
  LinkSupportReport report;

  std::set<Simplex> of_support;
  for (std::size_t k = 0; k < link.simplices.size(); ++k) {
    const auto& cells = support.cells[k + 1];
    for (const auto& s : link.simplices[k]) {
      if (std::binary_search(cells.begin(), cells.end(), s.cell.index)) of_support.insert(s.vertices.to_vector());
    }
  }

  std::map<Simplex, int> induced;
  if (top >= 1) {
    for (const auto& s : link.simplices[top - 1]) {
      if (z.get(s.cell.index)) induced[s.vertices.to_vector()] ^= 1;
    }
  }
  std::map<Simplex, int> boundary;
  for (const auto& [s, coeff] : induced) {
    if (!coeff || s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      boundary[face] ^= 1;
    }
  }
  report.inducedIsCycle = std::all_of(boundary.begin(), boundary.end(), [](const auto& e) { return e.second == 0; });
  std::set<Simplex> of_induced;
  for (const auto& [s, coeff] : induced) {
    if (coeff) close_downward(of_induced, s);
  }
  report.linkOfSupport = of_support.size();
  report.supportOfInduced = of_induced.size();
  report.holds = report.inducedIsCycle && of_support == of_induced;
  return report;
}

std::vector<std::uint32_t> link_of_support(const cube::CubeComplex& x, const cube::VertexLink& link,
                                           const SupportSet& s) {
  (void)x;
  std::vector<std::uint32_t> out;
  if (s.cells.size() < 2) return out;
  const auto& edges = s.cells[1];
  for (std::uint32_t i = 0; i < link.size(); ++i) {
    if (std::binary_search(edges.begin(), edges.end(), link.ends[i].edge)) out.push_back(i);
  }
  return out;
}

AntipodeReport vertex_antipode_check(const cube::VertexLink& link, const std::vector<std::uint32_t>& support) {
  auto flag = cube::check_flag(link);
  if (!flag.simplicial || !flag.flag) throw FlagPreconditionFailed("link is not a flag complex: " + flag.reason);
  AntipodeReport report;
  for (auto u : support) {
    AntipodeReport::Entry e{u, std::nullopt};
    for (auto w : support) {
      if (w != u && !link.adjacent(u, w)) {
        e.antipode = w;
        break;
      }
    }
    report.pass = report.pass && e.antipode.has_value();
    report.entries.push_back(e);
  }
  return report;
}

DeltaModType theta(int cell_dimension) {
  if (cell_dimension < 0) throw DomainError("cell dimension must be non-negative");
  return DeltaModType{cell_dimension};
}

DeltaModType theta(const cube::LinkSimplex& s) { return theta(static_cast<int>(s.vertices.size()) - 1); }

DeltaModType embed(DeltaModType t, int ambient) {
  if (ambient < t.cellDimension) throw DomainError("cannot embed into a smaller model simplex");
  return t;
}

std::string to_triplets(const GF2Matrix& m) {
  std::ostringstream out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (auto r : m.columns[c].ones()) out << r << ' ' << c << '\n';
  }
  return out.str();
}

nlohmann::json chain_json(const cube::CubeComplex& x, int dim, const BitVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : v.ones()) out.push_back(x.cube(dim, i).name);
  return out;
}

nlohmann::json to_json(const cube::CubeComplex& x, const SupportSet& s) {
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    nlohmann::json layer = nlohmann::json::array();
    for (auto i : s.cells[k]) layer.push_back(x.cube(static_cast<int>(k), i).name);
    cells.push_back(layer);
  }
  return {{"cycle", chain_json(x, static_cast<int>(s.cells.size()) - 1, s.cycle)}, {"cells", cells}};
}

}  // namespace orthantkit::homology
