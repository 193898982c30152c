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

// The squarefree Veronese case b = (1, ..., 1): x_i stands for x[i,1] and
// y_j for the variable of block j in the target ring k[y_1..y_s].
#ifndef TMI_VERONESE_HPP
#define TMI_VERONESE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tmi/complex.hpp"
#include "tmi/error.hpp"
#include "tmi/gamma.hpp"
#include "tmi/linalg.hpp"
#include "tmi/monomial.hpp"
#include "tmi/resolution.hpp"

namespace tmi {

inline VarId veronese_var(int i) { return {i, 1}; }

inline BlockConfig veronese_config(int m, int t) { return BlockConfig(m, t, std::vector<int>(static_cast<std::size_t>(m), 1)); }

// x_{i_1}...x_{i_t} (i_1 < ... < i_t) -> y_{i_1} y_{i_2 - 1} ... y_{i_t - t + 1},
// a monomial of degree t in s = m - t + 1 variables.
inline Monomial depolarize(const Monomial& mono, int m, int t) {
  if (t < 1 || t > m) throw ParameterError("depolarize needs 1 <= t <= m");
  if (!mono.is_squarefree() || mono.degree() != t) {
    throw ParameterError("depolarize expects a squarefree monomial of degree " + std::to_string(t) + ", got " +
                         to_string(mono));
  }
  std::vector<Monomial::Term> out;
  int k = 0;
  for (const auto& [v, e] : mono.terms()) {
    if (v.index != 1 || v.block < 1 || v.block > m) {
      throw ParameterError("depolarize expects variables x[1..m]: " + to_string(mono));
    }
    out.emplace_back(veronese_var(v.block - k), 1);
    ++k;
  }
  return Monomial(std::move(out));
}

// Inverse of depolarize: y_{c_1} ... y_{c_t} (c_1 <= ... <= c_t) ->
// x_{c_1} x_{c_2 + 1} ... x_{c_t + t - 1}.
inline Monomial polarize(const Monomial& mono, int m, int t) {
  if (t < 1 || t > m) throw ParameterError("polarize needs 1 <= t <= m");
  const int s = m - t + 1;
  if (mono.degree() != t) {
    throw ParameterError("polarize expects degree " + std::to_string(t) + ", got " + to_string(mono, 'y'));
  }
  std::vector<VarId> xs;
  int k = 0;
  for (VarId v : mono.expanded()) {
    if (v.index != 1 || v.block < 1 || v.block > s) {
      throw ParameterError("polarize expects variables y[1.." + std::to_string(s) + "]: " + to_string(mono, 'y'));
    }
    xs.push_back(veronese_var(v.block + k));
    ++k;
  }
  return Monomial::product_of(xs);
}

// Single-index text form, e.g. y[1]*y[2]^2. Parses back via parse_monomial.
inline std::string veronese_string(const Monomial& mono, char letter) {
  if (mono.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : mono.terms()) {
    if (!out.empty()) out += '*';
    out += std::string(1, letter) + "[" + std::to_string(v.block) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Generators of (y_1, ..., y_s)^t.
inline MonomialIdeal power_of_maximal_ideal(int s, int t) {
  std::vector<Monomial> gens;
  std::vector<Monomial::Term> current;
  auto recurse = [&](auto&& self, int var, int left) -> void {
    if (var > s) {
      if (left == 0) gens.emplace_back(current);
      return;
    }
    for (int e = left; e >= 0; --e) {
      if (e) current.emplace_back(veronese_var(var), e);
      self(self, var + 1, left - e);
      if (e) current.pop_back();
    }
  };
  recurse(recurse, 1, t);
  return MonomialIdeal(std::move(gens));
}

struct VeroneseReport {
  int m = 0;
  int t = 0;
  std::vector<std::size_t> f;
  std::vector<CheckReport> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed; });
  }
};

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Combinatorial and homological consequences of Γ_{m,t} subdividing the
// (m-t)-simplex on the consecutive generators x_1...x_t, ..., x_{m-t+1}...x_m.
inline VeroneseReport veronese_checks(int m, int t, std::uint32_t prime = kDefaultPrime) {
  const BlockConfig cfg = veronese_config(m, t);
  const LabeledComplex x = gamma(cfg);
  VeroneseReport report;
  report.m = m;
  report.t = t;
  report.f = f_vector(x);
  const int dim = m - t;
  const auto tops = maximal_cells(x);

  auto add = [&](std::string name, bool ok, std::string detail) {
    CheckReport r{std::move(name), ok, 1, {}};
    if (!ok) r.failures.push_back(std::move(detail));
    report.checks.push_back(std::move(r));
  };

  {
    bool pure = true;
    for (const Cell& c : tops) pure = pure && c.dim() == dim;
    add("pure", pure && x.dimension() == dim, "maximal cells are not all of dimension " + std::to_string(dim));
  }
  add("maximal-cells", static_cast<long>(tops.size()) == binomial(m - 1, t - 1),
      "expected " + std::to_string(binomial(m - 1, t - 1)) + " maximal cells, found " + std::to_string(tops.size()));
  {
    const auto h = reduced_homology(x, PrimeField(prime));
    const bool zero = std::all_of(h.begin(), h.end(), [](long v) { return v == 0; });
    add("reduced-homology", zero, "nonzero reduced homology");
    add("euler", euler_characteristic(x) == 1, "Euler characteristic " + std::to_string(euler_characteristic(x)));
  }
  {
    // Every codimension-1 cell lies in at most two maximal cells.
    std::map<Cell, int> cofaces;
    for (const Cell& top : tops) {
      for (const auto& inc : boundary(top)) ++cofaces[inc.facet];
    }
    int worst = 0;
    for (const auto& [c, k] : cofaces) worst = std::max(worst, k);
    add("pseudomanifold", worst <= 2, "a ridge lies in " + std::to_string(worst) + " maximal cells");
  }
  add("vertices", static_cast<long>(report.f.empty() ? 0 : report.f[0]) == binomial(m, t),
      "expected " + std::to_string(binomial(m, t)) + " vertices");
  {
    // The corners are exactly the vertices that lie in a single maximal cell.
    std::map<Monomial, int> owners;
    for (const Cell& top : tops) {
      for (const Monomial& v : top.vertex_labels()) ++owners[v];
    }
    std::set<Monomial> found;
    for (const auto& [v, k] : owners) {
      if (k == 1) found.insert(v);
    }
    std::set<Monomial> expected;
    for (int a = 1; a + t - 1 <= m; ++a) {
      std::vector<VarId> vs;
      for (int i = a; i < a + t; ++i) vs.push_back(veronese_var(i));
      expected.insert(Monomial::product_of(vs));
    }
    add("corners", found == expected, "corner vertices differ from the consecutive generators");
  }
  return report;
}

}  // namespace tmi

#endif  // TMI_VERONESE_HPP
