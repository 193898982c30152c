// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Labeled polytopal complexes whose cells are products of simplices
// Δ(U_1) × ... × Δ(U_k) on block-separated variable sets.
//
// A cell is stored as its factor tuple (U_1, ..., U_k). Because the factors
// are block-separated (every block in U_i precedes every block in U_{i+1}),
// the tuple is recovered from the vertex set alone, so two complexes built
// independently agree on shared cells and gluing is plain set union.
#ifndef TMI_COMPLEX_HPP
#define TMI_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmi/error.hpp"
#include "tmi/linalg.hpp"
#include "tmi/monomial.hpp"

namespace tmi {

using Factor = std::vector<VarId>;

class Cell {
 public:
  Cell() = default;

  explicit Cell(std::vector<Factor> factors) : factors_(std::move(factors)) {
    int dim = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Factor& u = factors_[i];
      if (u.empty()) throw ConstructionError("cell factors must be nonempty");
      std::sort(u.begin(), u.end());
      if (std::adjacent_find(u.begin(), u.end()) != u.end()) {
        throw ConstructionError("repeated variable inside a cell factor");
      }
      if (i > 0 && !(factors_[i - 1].back().block < u.front().block)) {
        throw ConstructionError("cell factors are not block-separated");
      }
      dim += static_cast<int>(u.size()) - 1;
    }
    dim_ = dim;
  }

  const std::vector<Factor>& factors() const& { return factors_; }
  std::vector<Factor> factors() && { return std::move(factors_); }
  std::size_t arity() const { return factors_.size(); }
  int dim() const { return dim_; }

  // lcm of the vertex labels, i.e. the product of every variable in the cell.
  Monomial label() const {
    std::vector<VarId> vars;
    for (const auto& u : factors_) vars.insert(vars.end(), u.begin(), u.end());
    return Monomial::product_of(vars);
  }

  std::vector<VarId> variables() const {
    std::vector<VarId> vars;
    for (const auto& u : factors_) vars.insert(vars.end(), u.begin(), u.end());
    return vars;  // already sorted by block separation
  }

  // Vertices u_1...u_k (u_i in U_i) in lexicographic order.
  std::vector<Cell> vertices() const {
    std::vector<Cell> out;
    std::vector<Factor> current(factors_.size());
    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == factors_.size()) {
        out.push_back(Cell::trusted(current, 0));
        return;
      }
      for (VarId v : factors_[i]) {
        current[i] = {v};
        self(self, i + 1);
      }
    };
    if (!factors_.empty()) recurse(recurse, 0);
    return out;
  }

  std::vector<Monomial> vertex_labels() const {
    std::vector<Monomial> out;
    for (const Cell& v : vertices()) out.push_back(v.label());
    return out;
  }

  // Every face, including the cell itself: componentwise nonempty subsets.
  std::vector<Cell> faces() const {
    std::vector<Cell> out;
    std::vector<Factor> current(factors_.size());
    auto recurse = [&](auto&& self, std::size_t i, int dim) -> void {
      if (i == factors_.size()) {
        out.push_back(Cell::trusted(current, dim));
        return;
      }
      const Factor& u = factors_[i];
      const std::uint32_t count = 1u << u.size();
      for (std::uint32_t mask = 1; mask < count; ++mask) {
        Factor sub;
        for (std::size_t p = 0; p < u.size(); ++p) {
          if (mask & (1u << p)) sub.push_back(u[p]);
        }
        const int d = dim + static_cast<int>(sub.size()) - 1;
        current[i] = std::move(sub);
        self(self, i + 1, d);
      }
    };
    if (!factors_.empty()) recurse(recurse, 0, 0);
    return out;
  }

  // Rebuilds the factor tuple from a vertex set given by labels. Throws if the
  // labels do not form the vertex set of a product of simplices.
  static Cell from_vertices(const std::vector<Monomial>& labels) {
    if (labels.empty()) throw ConstructionError("a cell needs at least one vertex");
    const std::size_t k = static_cast<std::size_t>(labels.front().degree());
    std::vector<std::set<VarId>> slots(k);
    std::set<Monomial> given;
    for (const auto& m : labels) {
      if (!m.is_squarefree() || static_cast<std::size_t>(m.degree()) != k) {
        throw ConstructionError("vertex labels must be squarefree of equal degree");
      }
      const auto vars = m.support();
      for (std::size_t i = 0; i < k; ++i) slots[i].insert(vars[i]);
      given.insert(m);
    }
    std::vector<Factor> factors;
    for (const auto& s : slots) factors.emplace_back(s.begin(), s.end());
    Cell cell(std::move(factors));
    const auto expected = cell.vertex_labels();
    if (std::set<Monomial>(expected.begin(), expected.end()) != given) {
      throw ConstructionError("vertex set is not a product of simplices");
    }
    return cell;
  }

  friend bool operator==(const Cell& a, const Cell& b) { return a.factors_ == b.factors_; }

  // Cells sort by dimension first, then lexicographically by factors.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.factors_ <=> b.factors_;
  }

 private:
  static Cell trusted(std::vector<Factor> factors, int dim) {
    Cell c;
    c.factors_ = std::move(factors);
    c.dim_ = dim;
    return c;
  }

  friend Cell concat_cells(const Cell& a, const Cell& b);
  friend Cell drop_variable(const Cell& c, std::size_t factor, std::size_t pos);

  std::vector<Factor> factors_;
  int dim_ = 0;
};

inline Cell concat_cells(const Cell& a, const Cell& b) {
  std::vector<Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return Cell::trusted(std::move(f), a.dim_ + b.dim_);
}

inline Cell drop_variable(const Cell& c, std::size_t factor, std::size_t pos) {
  std::vector<Factor> f = c.factors_;
  f[factor].erase(f[factor].begin() + static_cast<std::ptrdiff_t>(pos));
  return Cell::trusted(std::move(f), c.dim_ - 1);
}

inline std::string to_string(const Cell& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.factors().size(); ++i) {
    if (i) out += " | ";
    for (std::size_t p = 0; p < c.factors()[i].size(); ++p) {
      if (p) out += ' ';
      out += to_string(c.factors()[i][p]);
    }
  }
  return out + ")";
}

// One codimension-1 face of a cell with its incidence sign.
struct IncidencePair {
  Cell cell;
  Cell facet;
  int sign = 0;
};

// Codimension-1 faces: delete the p-th (0-based) variable of a factor U_k with
// |U_k| >= 2; the sign is (-1)^(p + sum_{l<k} (|U_l| - 1)). Empty for vertices.
// Calls fn(facet, sign, dropped_variable) for every codimension-1 face.
template <class Fn>
void for_each_facet(const Cell& cell, Fn&& fn) {
  int shift = 0;
  for (std::size_t k = 0; k < cell.arity(); ++k) {
    const Factor& u = cell.factors()[k];
    if (u.size() >= 2) {
      for (std::size_t p = 0; p < u.size(); ++p) {
        const int sign = ((static_cast<int>(p) + shift) % 2 == 0) ? 1 : -1;
        fn(drop_variable(cell, k, p), sign, u[p]);
      }
    }
    shift += static_cast<int>(u.size()) - 1;
  }
}

inline std::vector<IncidencePair> boundary(const Cell& cell) {
  std::vector<IncidencePair> out;
  for_each_facet(cell, [&](Cell facet, int sign, VarId) { out.push_back({cell, std::move(facet), sign}); });
  return out;
}

// A finite face-closed set of cells of common arity, held sorted.
class LabeledComplex {
 public:
  LabeledComplex() = default;
  explicit LabeledComplex(std::size_t arity) : arity_(arity) {}

  // Validates arity, face closure and distinct vertex labels.
  static LabeledComplex from_cells(std::vector<Cell> cells, std::size_t arity) {
    LabeledComplex x = trusted(std::move(cells), arity);
    for (const Cell& c : x.cells_) {
      if (c.arity() != arity) throw ConstructionError("cell arity differs from complex arity");
      for_each_facet(c, [&](const Cell& facet, int, VarId) {
        if (!x.has(facet)) throw ConstructionError("cell set is not closed under faces: missing " + to_string(facet));
      });
    }
    std::set<Monomial> labels;
    for (const Cell& v : x.cells_of_dim(0)) {
      if (!labels.insert(v.label()).second) throw ConstructionError("repeated vertex label " + to_string(v.label()));
    }
    return x;
  }

  // Face closure of the given cells.
  static LabeledComplex closure(const std::vector<Cell>& generators, std::size_t arity) {
    std::vector<Cell> all;
    for (const Cell& g : generators) {
      if (g.arity() != arity) throw ConstructionError("cell arity differs from complex arity");
      auto f = g.faces();
      all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    }
    return trusted(std::move(all), arity);
  }

  // Assumes the cells are face-closed; sorts and deduplicates.
  static LabeledComplex trusted(std::vector<Cell> cells, std::size_t arity) {
    LabeledComplex x(arity);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    x.cells_ = std::move(cells);
    x.index_dims();
    return x;
  }

  const std::vector<Cell>& cells() const& { return cells_; }
  std::vector<Cell> cells() && { return std::move(cells_); }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  std::size_t arity() const { return arity_; }
  int dimension() const { return cells_.empty() ? -1 : cells_.back().dim(); }

  // Cells of dimension d, contiguous in the sorted order.
  std::vector<Cell> cells_of_dim(int d) const {
    const auto [b, e] = dim_range(d);
    return std::vector<Cell>(cells_.begin() + static_cast<std::ptrdiff_t>(b),
                             cells_.begin() + static_cast<std::ptrdiff_t>(e));
  }

  // Index range [first, last) of the d-cells in cells().
  std::pair<std::size_t, std::size_t> dim_range(int d) const {
    if (d < 0 || d > dimension()) return {0, 0};
    return {dim_start_[static_cast<std::size_t>(d)], dim_start_[static_cast<std::size_t>(d) + 1]};
  }

  std::optional<std::size_t> index_of(const Cell& c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
  }

  bool has(const Cell& c) const { return index_of(c).has_value(); }

  std::vector<Monomial> vertex_labels() const {
    std::vector<Monomial> out;
    for (const Cell& v : cells_of_dim(0)) out.push_back(v.label());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<VarId> variables() const {
    std::set<VarId> vars;
    for (const Cell& v : cells_of_dim(0)) {
      for (const auto& u : v.factors()) vars.insert(u.front());
    }
    return {vars.begin(), vars.end()};
  }

  friend bool operator==(const LabeledComplex& a, const LabeledComplex& b) {
    return a.arity_ == b.arity_ && a.cells_ == b.cells_;
  }

 private:
  void index_dims() {
    dim_start_.assign(static_cast<std::size_t>(dimension() + 2), 0);
    std::size_t i = 0;
    for (int d = 0; d <= dimension(); ++d) {
      dim_start_[static_cast<std::size_t>(d)] = i;
      while (i < cells_.size() && cells_[i].dim() == d) ++i;
    }
    dim_start_[static_cast<std::size_t>(dimension() + 1)] = cells_.size();
  }

  std::size_t arity_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::size_t> dim_start_;
};

// The simplex Δ(vars): every nonempty subset, arity 1.
inline LabeledComplex simplex(const std::vector<VarId>& vars) {
  if (vars.empty()) throw ConstructionError("simplex on an empty variable set");
  if (vars.size() > 30) throw SizeCapError("simplex on more than 30 variables");
  return LabeledComplex::closure({Cell({vars})}, 1);
}

inline LabeledComplex simplex(const MonomialIdeal& variable_ideal) {
  std::vector<VarId> vars;
  for (const auto& g : variable_ideal.gens()) {
    if (g.degree() != 1) throw ConstructionError("simplex expects an ideal generated by variables");
    vars.push_back(g.terms().front().first);
  }
  return simplex(vars);
}

// X × Y. Every block of X must precede every block of Y.
inline LabeledComplex product(const LabeledComplex& x, const LabeledComplex& y) {
  const auto vx = x.variables();
  const auto vy = y.variables();
  if (!vx.empty() && !vy.empty() && !(vx.back().block < vy.front().block)) {
    throw ConstructionError("product factors overlap or interleave blocks");
  }
  std::vector<Cell> cells;
  cells.reserve(x.size() * y.size());
  for (const Cell& a : x.cells()) {
    for (const Cell& b : y.cells()) cells.push_back(concat_cells(a, b));
  }
  return LabeledComplex::trusted(std::move(cells), x.arity() + y.arity());
}

// X ∪ Y as cell sets.
inline LabeledComplex glue(const LabeledComplex& x, const LabeledComplex& y) {
  if (x.arity() != y.arity()) throw ConstructionError("glue of complexes with different arity");
  std::vector<Cell> cells;
  cells.reserve(x.size() + y.size());
  std::set_union(x.cells().begin(), x.cells().end(), y.cells().begin(), y.cells().end(),
                 std::back_inserter(cells));
  return LabeledComplex::trusted(std::move(cells), x.arity());
}

// X ∩ Y as cell sets; the gluing hypothesis is checked on this.
inline LabeledComplex intersect(const LabeledComplex& x, const LabeledComplex& y) {
  if (x.arity() != y.arity()) throw ConstructionError("intersection of complexes with different arity");
  std::vector<Cell> cells;
  std::set_intersection(x.cells().begin(), x.cells().end(), y.cells().begin(), y.cells().end(),
                        std::back_inserter(cells));
  return LabeledComplex::trusted(std::move(cells), x.arity());
}

// Cells whose label divides b. Face-closed because labels grow with cells.
inline LabeledComplex restrict_below(const LabeledComplex& x, const Monomial& b) {
  std::vector<Cell> cells;
  for (const Cell& c : x.cells()) {
    if (divides(c.label(), b)) cells.push_back(c);
  }
  return LabeledComplex::trusted(std::move(cells), x.arity());
}

inline std::vector<std::size_t> f_vector(const LabeledComplex& x) {
  std::vector<std::size_t> f(static_cast<std::size_t>(x.dimension() + 1), 0);
  for (const Cell& c : x.cells()) ++f[static_cast<std::size_t>(c.dim())];
  return f;
}

inline long euler_characteristic(const LabeledComplex& x) {
  long chi = 0;
  for (const Cell& c : x.cells()) chi += (c.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

// Connectivity of the 1-skeleton. The empty complex is not connected.
inline bool is_connected(const LabeledComplex& x) {
  const auto [v0, v1] = x.dim_range(0);
  const std::size_t nv = v1 - v0;
  if (nv == 0) return false;
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t components = nv;
  const auto [e0, e1] = x.dim_range(1);
  for (std::size_t e = e0; e < e1; ++e) {
    const auto ends = x.cells()[e].vertices();
    const std::size_t a = find(*x.index_of(ends[0]) - v0);
    const std::size_t b = find(*x.index_of(ends[1]) - v0);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

// True when every cell of `inner` is a cell of `outer`.
inline bool contains(const LabeledComplex& inner, const LabeledComplex& outer) {
  if (inner.empty()) return true;
  if (inner.arity() != outer.arity()) return false;
  return std::includes(outer.cells().begin(), outer.cells().end(), inner.cells().begin(), inner.cells().end());
}

// Cells that are not a proper face of another cell.
inline std::vector<Cell> maximal_cells(const LabeledComplex& x) {
  std::vector<char> covered(x.size(), 0);
  for (const Cell& c : x.cells()) {
    for_each_facet(c, [&](const Cell& facet, int, VarId) { covered[*x.index_of(facet)] = 1; });
  }
  std::vector<Cell> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!covered[i]) out.push_back(x.cells()[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Geometry. A vertex sits at the exponent vector of its label in R^m, with
// coordinates ordered by `universe`.

using Point = std::vector<int>;

inline Point exponent_vector(const Monomial& m, const std::vector<VarId>& universe) {
  Point p(universe.size(), 0);
  for (const auto& [v, e] : m.terms()) {
    auto it = std::lower_bound(universe.begin(), universe.end(), v);
    if (it == universe.end() || *it != v) throw ParameterError("monomial variable outside the coordinate universe");
    p[static_cast<std::size_t>(it - universe.begin())] = e;
  }
  return p;
}

// Dimension of the affine hull, computed exactly over Q.
inline int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  const int rows = static_cast<int>(points.front().size());
  RationalMatrix diffs(rows, static_cast<int>(points.size()) - 1);
  for (std::size_t c = 1; c < points.size(); ++c) {
    for (int r = 0; r < rows; ++r) {
      const int d = points[c][static_cast<std::size_t>(r)] - points[0][static_cast<std::size_t>(r)];
      if (d != 0) diffs.add(r, static_cast<int>(c) - 1, d);
    }
  }
  return static_cast<int>(rank(diffs));
}

inline std::map<Cell, std::vector<Point>> geometric_realization(const LabeledComplex& x,
                                                                 const std::vector<VarId>& universe) {
  std::map<Cell, std::vector<Point>> out;
  for (const Cell& c : x.cells()) {
    std::vector<Point> pts;
    for (const Monomial& v : c.vertex_labels()) pts.push_back(exponent_vector(v, universe));
    out.emplace(c, std::move(pts));
  }
  return out;
}

inline std::map<Cell, std::vector<Point>> geometric_realization(const LabeledComplex& x) {
  std::vector<VarId> universe;
  for (const Cell& c : x.cells_of_dim(0)) {
    const auto vs = c.variables();
    universe.insert(universe.end(), vs.begin(), vs.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  return geometric_realization(x, universe);
}

// Pulling triangulation of a cell in the lexicographic vertex order: pull the
// first vertex v, then cone v over the triangulations of the facets missing v.
// Each simplex is a list of vertex labels.
inline std::vector<std::vector<Monomial>> pulling_triangulation(const Cell& cell) {
  if (cell.dim() == 0) return {{cell.label()}};
  Monomial apex;
  {
    std::vector<VarId> first;
    for (const auto& u : cell.factors()) first.push_back(u.front());
    apex = Monomial::product_of(first);
  }
  std::vector<std::vector<Monomial>> out;
  for (std::size_t k = 0; k < cell.arity(); ++k) {
    if (cell.factors()[k].size() < 2) continue;
    // Dropping the apex's own variable from U_k is the facet that misses it.
    for (auto simplex : pulling_triangulation(drop_variable(cell, k, 0))) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace tmi

#endif  // TMI_COMPLEX_HPP
