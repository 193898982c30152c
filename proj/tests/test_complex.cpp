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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "sweep.hpp"
#include "tmi/complex.hpp"
#include "tmi/gamma.hpp"

namespace tmi {
namespace {

using Sizes = std::vector<std::size_t>;

Monomial M(const std::string& s) { return parse_monomial(s); }

std::vector<VarId> vars(std::initializer_list<std::pair<int, int>> ids) {
  std::vector<VarId> out;
  for (auto [b, i] : ids) out.push_back({b, i});
  return out;
}

// Polynomial product of f-vectors viewed as coefficient lists.
Sizes convolve(const Sizes& a, const Sizes& b) {
  if (a.empty() || b.empty()) return {};
  Sizes out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Signed count over every codim-2 flag: Σ_{F' ⊂ F} ε(F,F') ε(F',F'') per F''.
bool boundary_squares_to_zero(const LabeledComplex& x) {
  for (const Cell& c : x.cells()) {
    std::map<Cell, int> acc;
    for (const auto& a : boundary(c)) {
      for (const auto& b : boundary(a.facet)) acc[b.facet] += a.sign * b.sign;
    }
    for (const auto& [face, v] : acc) {
      if (v != 0) return false;
    }
  }
  return true;
}

TEST(Simplex, Examples) {
  const auto point = simplex(vars({{3, 1}}));
  EXPECT_EQ(f_vector(point), (Sizes{1}));
  EXPECT_EQ(point.vertex_labels(), std::vector<Monomial>{M("x[3,1]")});

  const auto edge = simplex(vars({{1, 1}, {1, 2}}));
  EXPECT_EQ(f_vector(edge), (Sizes{2, 1}));
  EXPECT_EQ(edge.cells_of_dim(1).front().label(), M("x[1,1]*x[1,2]"));

  EXPECT_EQ(simplex(vars({{3, 1}, {4, 1}})).size(), 3u);
  EXPECT_EQ(f_vector(simplex(vars({{1, 1}, {1, 2}, {2, 1}}))), (Sizes{3, 3, 1}));
  EXPECT_THROW(simplex(std::vector<VarId>{}), ConstructionError);
}

TEST(Product, Examples) {
  const auto p1 = simplex(vars({{1, 1}, {1, 2}}));
  const auto p2 = simplex(vars({{2, 1}, {2, 2}}));
  const auto square = product(p1, p2);
  EXPECT_EQ(square.size(), 9u);
  EXPECT_EQ(f_vector(square), (Sizes{4, 4, 1}));
  EXPECT_EQ(square.arity(), 2u);

  const auto with_point = product(p1, simplex(vars({{3, 1}})));
  EXPECT_EQ(f_vector(with_point), f_vector(p1));
  EXPECT_EQ(with_point.arity(), 2u);

  const auto single = product(simplex(vars({{1, 1}})), simplex(vars({{2, 1}})));
  EXPECT_EQ(single.vertex_labels(), std::vector<Monomial>{M("x[1,1]*x[2,1]")});
}

TEST(Product, RejectsOverlapAndInterleaving) {
  const auto a = simplex(vars({{1, 1}, {2, 1}}));
  EXPECT_THROW(product(a, simplex(vars({{2, 1}}))), ConstructionError);
  EXPECT_THROW(product(a, simplex(vars({{1, 2}}))), ConstructionError);
  EXPECT_THROW(product(simplex(vars({{3, 1}})), a), ConstructionError);
}

TEST(Product, FVectorIsConvolutionProperty) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    LabeledComplex x = simplex(vars({{1, 1}}));
    Sizes expected{1};
    x = LabeledComplex::closure({}, 0);
    bool first = true;
    const int blocks = 1 + static_cast<int>(rng() % 4);
    for (int b = 1; b <= blocks; ++b) {
      std::vector<VarId> vs;
      const int size = 1 + static_cast<int>(rng() % 3);
      for (int i = 1; i <= size; ++i) vs.push_back({b, i});
      const auto s = simplex(vs);
      if (first) {
        x = s;
        expected = f_vector(s);
        first = false;
      } else {
        x = product(x, s);
        expected = convolve(expected, f_vector(s));
      }
    }
    EXPECT_EQ(f_vector(x), expected);
    EXPECT_TRUE(boundary_squares_to_zero(x));
  }
}

// The three maximal products listed for Γ_{4,3} with b = (2,2,1,1).
std::vector<LabeledComplex> example_pieces() {
  const auto d = [](std::initializer_list<std::pair<int, int>> ids) { return simplex(vars(ids)); };
  return {
      product(product(d({{1, 1}, {1, 2}, {2, 1}, {2, 2}}), d({{3, 1}})), d({{4, 1}})),
      product(product(d({{1, 1}, {1, 2}}), d({{2, 1}, {2, 2}, {3, 1}})), d({{4, 1}})),
      product(product(d({{1, 1}, {1, 2}}), d({{2, 1}, {2, 2}})), d({{3, 1}, {4, 1}})),
  };
}

TEST(Glue, Examples) {
  const auto pieces = example_pieces();
  EXPECT_EQ(glue(pieces[0], pieces[0]), pieces[0]);
  const auto all = glue(glue(pieces[0], pieces[1]), pieces[2]);
  EXPECT_EQ(f_vector(all)[0], 12u);

  const auto two = glue(simplex(vars({{1, 1}})), simplex(vars({{2, 1}})));
  EXPECT_EQ(f_vector(two), (Sizes{2}));
  EXPECT_FALSE(is_connected(two));

  EXPECT_THROW(glue(pieces[0], simplex(vars({{1, 1}}))), ConstructionError);
}

TEST(Glue, FVectorInclusionExclusion) {
  const auto pieces = example_pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      const auto u = glue(pieces[i], pieces[j]);
      const auto n = intersect(pieces[i], pieces[j]);
      EXPECT_EQ(u.size() + n.size(), pieces[i].size() + pieces[j].size());
      auto fu = f_vector(u), fn = f_vector(n), fa = f_vector(pieces[i]), fb = f_vector(pieces[j]);
      fn.resize(fu.size(), 0);
      fa.resize(fu.size(), 0);
      fb.resize(fu.size(), 0);
      for (std::size_t d = 0; d < fu.size(); ++d) EXPECT_EQ(fu[d] + fn[d], fa[d] + fb[d]);
    }
  }
}

TEST(Boundary, EdgeSigns) {
  const Cell edge({vars({{1, 1}, {1, 2}})});
  const auto b = boundary(edge);
  ASSERT_EQ(b.size(), 2u);
  // ∂ = (x12) - (x11): dropping position p carries (-1)^p.
  EXPECT_EQ(b[0].facet.label(), M("x[1,2]"));
  EXPECT_EQ(b[0].sign, 1);
  EXPECT_EQ(b[1].facet.label(), M("x[1,1]"));
  EXPECT_EQ(b[1].sign, -1);
  EXPECT_TRUE(boundary(Cell({vars({{1, 1}})})).empty());
}

TEST(Boundary, SquareSignsAndCancellation) {
  const Cell square({vars({{1, 1}, {1, 2}}), vars({{3, 1}, {4, 1}})});
  const auto b = boundary(square);
  ASSERT_EQ(b.size(), 4u);
  // First factor: (-1)^p; second factor shifted by |U_1| - 1 = 1.
  EXPECT_EQ(b[0].sign, 1);
  EXPECT_EQ(b[1].sign, -1);
  EXPECT_EQ(b[2].sign, -1);
  EXPECT_EQ(b[3].sign, 1);
  std::map<Cell, int> acc;
  for (const auto& a : b) {
    for (const auto& c : boundary(a.facet)) acc[c.facet] += a.sign * c.sign;
  }
  EXPECT_EQ(acc.size(), 4u);
  for (const auto& [v, s] : acc) EXPECT_EQ(s, 0);
}

TEST(Boundary, SquaresToZeroOnEveryGamma) {
  for (const auto& cfg : testing::sweep(7)) {
    EXPECT_TRUE(boundary_squares_to_zero(gamma(cfg))) << testing::describe(cfg);
  }
}

TEST(Cell, RejectsMalformedFactors) {
  EXPECT_THROW(Cell({vars({})}), ConstructionError);
  EXPECT_THROW(Cell({vars({{1, 1}, {1, 1}})}), ConstructionError);
  EXPECT_THROW(Cell({vars({{2, 1}}), vars({{1, 1}})}), ConstructionError);
  EXPECT_THROW(Cell({vars({{1, 1}, {2, 1}}), vars({{2, 2}})}), ConstructionError);
}

TEST(Cell, CanonicalFormRoundTrip) {
  for (const auto& cfg : testing::sweep(6)) {
    const auto x = gamma(cfg);
    for (const Cell& c : x.cells()) {
      EXPECT_EQ(Cell::from_vertices(c.vertex_labels()), c) << to_string(c);
    }
  }
  EXPECT_THROW(Cell::from_vertices({M("x[1,1]*x[2,1]"), M("x[1,2]*x[2,2]")}), ConstructionError);
  EXPECT_THROW(Cell::from_vertices({M("x[1,1]*x[2,1]"), M("x[1,1]")}), ConstructionError);
}

TEST(Cell, LabelMonotonicity) {
  for (const auto& cfg : testing::sweep(6)) {
    const auto x = gamma(cfg);
    for (const Cell& c : x.cells()) {
      for (const auto& inc : boundary(c)) EXPECT_TRUE(divides(inc.facet.label(), c.label()));
    }
  }
}

TEST(LabeledComplex, FromCellsValidates) {
  const Cell edge({vars({{1, 1}, {1, 2}})});
  EXPECT_THROW(LabeledComplex::from_cells({edge}, 1), ConstructionError);
  const auto ok = LabeledComplex::from_cells({edge, Cell({vars({{1, 1}})}), Cell({vars({{1, 2}})})}, 1);
  EXPECT_EQ(ok.size(), 3u);
  EXPECT_THROW(LabeledComplex::from_cells({Cell({vars({{1, 1}})})}, 2), ConstructionError);
}

TEST(RestrictBelow, Examples) {
  const BlockConfig cfg(4, 3, {2, 2, 1, 1});
  const auto x = gamma(cfg);
  Monomial top;
  for (const auto& v : x.vertex_labels()) top = lcm(top, v);
  EXPECT_EQ(restrict_below(x, top), x);
  EXPECT_TRUE(restrict_below(x, Monomial()).empty());

  const Monomial b = M("x[1,1]*x[2,1]*x[3,1]*x[4,1]");
  const auto r = restrict_below(x, b);
  std::vector<Monomial> filtered;  // divisibility filter straight from the generators
  for (const auto& g : transversal_generators(cfg).gens()) {
    if (divides(g, b)) filtered.push_back(g);
  }
  std::sort(filtered.begin(), filtered.end());
  EXPECT_EQ(r.vertex_labels(), filtered);
  EXPECT_EQ(filtered.size(), 4u);
  // A path x11x21x31 - x11x21x41 - x11x31x41 - x21x31x41.
  EXPECT_EQ(f_vector(r), (Sizes{4, 3}));
  EXPECT_TRUE(is_connected(r));
  for (const Cell& c : x.cells()) EXPECT_EQ(r.has(c), divides(c.label(), b));
}

TEST(Structure, FVectorConnectivityContainment) {
  EXPECT_EQ(f_vector(simplex(vars({{1, 1}, {2, 1}, {3, 1}}))), (Sizes{3, 3, 1}));
  EXPECT_FALSE(is_connected(glue(simplex(vars({{1, 1}})), simplex(vars({{2, 1}})))));
  EXPECT_FALSE(is_connected(LabeledComplex(1)));
  const BlockConfig ones(4, 2, {1, 1, 1, 1});
  EXPECT_TRUE(contains(gamma(ones.prefix(3, 2)), gamma(ones)));
  EXPECT_FALSE(contains(gamma(ones), gamma(ones.prefix(3, 2))));
}

TEST(Geometry, ExponentVectorsAndAffineDimension) {
  const BlockConfig cfg(4, 3, {2, 2, 1, 1});
  const auto x = gamma(cfg);
  const auto real = geometric_realization(x, cfg.variables());
  const Cell v({vars({{1, 1}}), vars({{3, 1}}), vars({{4, 1}})});
  EXPECT_EQ(real.at(v), (std::vector<Point>{{1, 0, 0, 0, 1, 1}}));
  for (const auto& [cell, pts] : real) {
    if (cell.dim() == 1) {
      EXPECT_EQ(pts.size(), 2u);
    }
    EXPECT_EQ(affine_dimension(pts), cell.dim()) << to_string(cell);
  }
  EXPECT_EQ(geometric_realization(x).size(), x.size());
}

TEST(Geometry, AffineDimensionAcrossSweep) {
  for (const auto& cfg : testing::sweep(7)) {
    for (const auto& [cell, pts] : geometric_realization(gamma(cfg), cfg.variables())) {
      ASSERT_EQ(affine_dimension(pts), cell.dim()) << testing::describe(cfg) << " " << to_string(cell);
    }
  }
}

long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

TEST(PullingTriangulation, CountsAndSimplices) {
  const Cell square({vars({{1, 1}, {1, 2}}), vars({{2, 1}, {2, 2}})});
  EXPECT_EQ(pulling_triangulation(square).size(), 2u);
  const Cell prism({vars({{1, 1}, {1, 2}}), vars({{2, 1}, {2, 2}, {3, 1}})});
  EXPECT_EQ(pulling_triangulation(prism).size(), 3u);
  const Cell cube({vars({{1, 1}, {1, 2}}), vars({{2, 1}, {2, 2}}), vars({{3, 1}, {4, 1}})});
  EXPECT_EQ(pulling_triangulation(cube).size(), 6u);
  const Cell tetra({vars({{1, 1}, {1, 2}, {2, 1}, {2, 2}})});
  EXPECT_EQ(pulling_triangulation(tetra).size(), 1u);

  // Δ_{a_1} × ... × Δ_{a_k} has normalized volume (Σ a_i)! / Π a_i!, and every
  // triangulation into lattice simplices here is unimodular.
  for (const auto& cfg : testing::sweep(6)) {
    const std::vector<VarId> universe = cfg.variables();
    for (const Cell& c : maximal_cells(gamma(cfg))) {
      long expected = factorial(c.dim());
      for (const auto& u : c.factors()) expected /= factorial(static_cast<int>(u.size()) - 1);
      const auto tri = pulling_triangulation(c);
      EXPECT_EQ(static_cast<long>(tri.size()), expected) << to_string(c);
      for (const auto& s : tri) {
        std::vector<Point> pts;
        for (const auto& m : s) pts.push_back(exponent_vector(m, universe));
        EXPECT_EQ(static_cast<int>(pts.size()), c.dim() + 1);
        EXPECT_EQ(affine_dimension(pts), c.dim());
      }
    }
  }
}

}  // namespace
}  // namespace tmi
