#include "orthantkit/cube_complex.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "orthantkit/error.hpp"

namespace orthantkit::cube {

namespace {

constexpr int kMaxDim = 25;

}  // namespace

Isometry Isometry::identity(int n) {
  Isometry iso;
  for (int j = 0; j < n; ++j) iso.perm.push_back(static_cast<std::uint8_t>(j));
  return iso;
}

bool Isometry::valid() const {
  std::uint32_t hit = 0;
  for (auto p : perm) {
    if (p >= perm.size() || ((hit >> p) & 1u)) return false;
    hit |= 1u << p;
  }
  return perm.size() == 32 || (flips >> perm.size()) == 0;
}

std::uint32_t Isometry::apply(std::uint32_t corner) const {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (((corner ^ flips) >> j) & 1u) out |= 1u << perm[j];
  }
  return out;
}

std::size_t CubeComplex::add_cube(int dim, std::string name) {
  if (dim < 0 || dim >= kMaxDim) throw MalformedComplex("unsupported cube dimension " + std::to_string(dim));
  if (by_name_.count(name)) throw MalformedComplex("duplicate cube id '" + name + "'");
  if (static_cast<int>(cells_.size()) <= dim) cells_.resize(dim + 1);
  auto index = cells_[dim].size();
  by_name_.emplace(name, CellRef{dim, index});
  cells_[dim].push_back(Cube{std::move(name), dim, std::vector<std::optional<FaceGluing>>(2 * dim)});
  finalized_ = false;
  return index;
}

void CubeComplex::reserve(const std::vector<std::size_t>& per_dim) {
  if (per_dim.size() > static_cast<std::size_t>(kMaxDim)) throw MalformedComplex("unsupported cube dimension");
  if (cells_.size() < per_dim.size()) cells_.resize(per_dim.size());
  std::size_t total = by_name_.size();
  for (std::size_t k = 0; k < per_dim.size(); ++k) {
    cells_[k].reserve(cells_[k].size() + per_dim[k]);
    total += per_dim[k];
  }
  by_name_.reserve(total);
}

void CubeComplex::glue(int dim, std::size_t cube, int slot, std::size_t target, Isometry iso) {
  if (dim < 1 || dim >= static_cast<int>(cells_.size()) || cube >= cells_[dim].size()) {
    throw MalformedComplex("gluing refers to a missing " + std::to_string(dim) + "-cube");
  }
  auto& c = cells_[dim][cube];
  if (slot < 0 || slot >= 2 * dim) {
    throw MalformedComplex("face slot " + std::to_string(slot) + " out of range for '" + c.name + "'");
  }
  if (c.faces[slot]) throw MalformedComplex("face slot " + std::to_string(slot) + " of '" + c.name + "' glued twice");
  if (iso.dim() != dim - 1 || !iso.valid()) {
    throw MalformedComplex("face slot " + std::to_string(slot) + " of '" + c.name + "' has an invalid isometry");
  }
  c.faces[slot] = FaceGluing{target, std::move(iso)};
  finalized_ = false;
}

std::size_t CubeComplex::count(int dim) const {
  return dim >= 0 && dim < static_cast<int>(cells_.size()) ? cells_[dim].size() : 0;
}

std::vector<std::size_t> CubeComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& layer : cells_) out.push_back(layer.size());
  return out;
}

std::optional<CellRef> CubeComplex::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void CubeComplex::require_finalized() const {
  if (!finalized_) throw MalformedComplex("cube complex used before finalize()");
}

namespace {

// Result of descending through face gluings: the reached cell and, for each
// still-free coordinate of the starting cube, where it lands and whether it
// is reflected.
struct Descent {
  std::size_t cell = 0;
  std::array<int, kMaxDim> pos{};
  std::array<std::uint8_t, kMaxDim> flip{};
  std::uint32_t alive = 0;
};

Descent descend(const std::vector<std::vector<Cube>>& cells, int dim, std::size_t cube, const int* order, int count,
                std::uint32_t values) {
  Descent d;
  for (int j = 0; j < dim; ++j) d.pos[j] = j;
  d.alive = dim == 32 ? ~0u : (1u << dim) - 1;
  int cur_dim = dim;
  std::size_t cur = cube;
  for (int t = 0; t < count; ++t) {
    const int i = order[t];
    const int p = d.pos[i];
    auto side = ((values >> i) & 1u) ^ d.flip[i];
    const auto& slot = cells[cur_dim][cur].faces[2 * p + side];
    if (!slot) throw MalformedComplex("face slot of '" + cells[cur_dim][cur].name + "' is not glued");
    d.alive &= ~(1u << i);
    for (int j = 0; j < dim; ++j) {
      if (!((d.alive >> j) & 1u)) continue;
      int q = d.pos[j] < p ? d.pos[j] : d.pos[j] - 1;
      d.pos[j] = slot->iso.perm[q];
      d.flip[j] ^= static_cast<std::uint8_t>((slot->iso.flips >> q) & 1u);
    }
    cur = slot->target;
    --cur_dim;
  }
  d.cell = cur;
  return d;
}

bool same_face(const Descent& a, const Descent& b, int dim) {
  if (a.cell != b.cell || a.alive != b.alive) return false;
  for (int j = 0; j < dim; ++j) {
    if (((a.alive >> j) & 1u) && (a.pos[j] != b.pos[j] || a.flip[j] != b.flip[j])) return false;
  }
  return true;
}

}  // namespace

FaceRef CubeComplex::face_in_order(int dim, std::size_t cube, const std::vector<int>& order,
                                   std::uint32_t values) const {
  auto d = descend(cells_, dim, cube, order.data(), static_cast<int>(order.size()), values);
  FaceRef out{d.cell, {}};
  int k = 0;
  for (int j = 0; j < dim; ++j) {
    if (!((d.alive >> j) & 1u)) continue;
    out.iso.perm.push_back(static_cast<std::uint8_t>(d.pos[j]));
    if (d.flip[j]) out.iso.flips |= 1u << k;
    ++k;
  }
  return out;
}

FaceRef CubeComplex::face(int dim, std::size_t cube, std::uint32_t fixed_mask, std::uint32_t values) const {
  std::vector<int> order;
  for (int j = 0; j < dim; ++j) {
    if ((fixed_mask >> j) & 1u) order.push_back(j);
  }
  return face_in_order(dim, cube, order, values);
}

void CubeComplex::finalize(bool check_corners) {
  for (int n = 1; n < static_cast<int>(cells_.size()); ++n) {
    for (const auto& c : cells_[n]) {
      for (int slot = 0; slot < 2 * n; ++slot) {
        if (!c.faces[slot]) {
          throw MalformedComplex("face slot " + std::to_string(slot) + " of '" + c.name + "' is not glued");
        }
        if (c.faces[slot]->target >= cells_[n - 1].size()) {
          throw MalformedComplex("face slot " + std::to_string(slot) + " of '" + c.name + "' targets a missing cube");
        }
      }
    }
  }
  // The two descents to every codimension-2 face must agree.
  for (int n = 2; check_corners && n < static_cast<int>(cells_.size()); ++n) {
    for (std::size_t idx = 0; idx < cells_[n].size(); ++idx) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (std::uint32_t sides = 0; sides < 4; ++sides) {
            std::uint32_t values = ((sides & 1u) << i) | ((sides >> 1) << j);
            const int ij[2] = {i, j};
            const int ji[2] = {j, i};
            if (!same_face(descend(cells_, n, idx, ij, 2, values), descend(cells_, n, idx, ji, 2, values), n)) {
              throw MalformedComplex("gluings of '" + cells_[n][idx].name + "' disagree on the corner face x" +
                                     std::to_string(i) + "=" + std::to_string(sides & 1u) + ", x" +
                                     std::to_string(j) + "=" + std::to_string(sides >> 1));
            }
          }
        }
      }
    }
  }

  corners_.assign(cells_.size(), {});
  corner_edges_.assign(cells_.size(), {});
  if (!cells_.empty()) {
    for (std::size_t v = 0; v < cells_[0].size(); ++v) corners_[0].push_back(v);
  }
  for (int n = 1; n < static_cast<int>(cells_.size()); ++n) {
    const std::uint32_t ncorners = 1u << n;
    const std::size_t below = std::size_t{1} << (n - 1);
    auto& corners = corners_[n];
    auto& edges = corner_edges_[n];
    corners.resize(cells_[n].size() * ncorners);
    edges.resize(cells_[n].size() * ncorners * n);
    for (std::size_t idx = 0; idx < cells_[n].size(); ++idx) {
      const auto& c = cells_[n][idx];
      for (std::uint32_t corner = 0; corner < ncorners; ++corner) {
        const auto& g0 = *c.faces[corner & 1u];
        corners[idx * ncorners + corner] = corners_[n - 1][g0.target * below + g0.iso.apply(corner >> 1)];
        for (int axis = 0; axis < n; ++axis) {
          auto& slot = edges[(idx * ncorners + corner) * n + axis];
          if (n == 1) {
            slot = EdgeEnd{idx, static_cast<std::uint8_t>(corner)};
            continue;
          }
          int j = axis == 0 ? 1 : 0;
          const auto& g = *c.faces[2 * j + ((corner >> j) & 1u)];
          std::uint32_t low = corner & ((1u << j) - 1);
          std::uint32_t high = corner >> (j + 1);
          std::uint32_t face_corner = g.iso.apply(low | (high << j));
          int face_axis = g.iso.perm[axis < j ? axis : axis - 1];
          slot = corner_edges_[n - 1][(g.target * below + face_corner) * (n - 1) + face_axis];
        }
      }
    }
  }
  finalized_ = true;
}

}  // namespace orthantkit::cube
