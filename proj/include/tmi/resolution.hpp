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

// Cellular chain complexes of labeled complexes, Betti tables and the checks
// that certify a complex supports a minimal free resolution.
#ifndef TMI_RESOLUTION_HPP
#define TMI_RESOLUTION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmi/complex.hpp"
#include "tmi/error.hpp"
#include "tmi/homology.hpp"
#include "tmi/linalg.hpp"
#include "tmi/monomial.hpp"
#include "tmi/parallel.hpp"

namespace tmi {

struct GradedGenerator {
  Cell cell;
  Monomial multidegree;
  int degree = 0;
};

// F_i: one generator per i-cell, in degree equal to the cell label.
struct GradedFreeModule {
  int index = 0;
  std::vector<GradedGenerator> generators;
};

// Entry of d_i : F_i -> F_{i-1}: sign * (m_F / m_F') at (row F', column F).
struct DifferentialEntry {
  int row = 0;
  int col = 0;
  int sign = 0;
  Monomial coefficient;
};

struct Differential {
  int index = 0;  // i, for d_i : F_i -> F_{i-1}
  int rows = 0;
  int cols = 0;
  std::vector<DifferentialEntry> entries;
};

// modules[i] = F_i; differentials[i-1] = d_i.
struct ChainComplex {
  std::vector<GradedFreeModule> modules;
  std::vector<Differential> differentials;

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (const auto& m : modules) out.push_back(m.generators.size());
    return out;
  }
};

inline ChainComplex cellular_complex(const LabeledComplex& x) {
  if (x.empty()) throw ConstructionError("cellular complex of an empty labeled complex");
  ChainComplex out;
  for (int d = 0; d <= x.dimension(); ++d) {
    GradedFreeModule mod;
    mod.index = d;
    for (const Cell& c : x.cells_of_dim(d)) {
      Monomial label = c.label();
      const int deg = label.degree();
      mod.generators.push_back({c, std::move(label), deg});
    }
    out.modules.push_back(std::move(mod));
  }
  for (int d = 1; d <= x.dimension(); ++d) {
    const auto [first, last] = x.dim_range(d);
    const std::size_t below = x.dim_range(d - 1).first;
    Differential diff;
    diff.index = d;
    diff.rows = static_cast<int>(out.modules[static_cast<std::size_t>(d - 1)].generators.size());
    diff.cols = static_cast<int>(last - first);
    for (std::size_t g = first; g < last; ++g) {
      const Cell& c = x.cells()[g];
      for_each_facet(c, [&](const Cell& facet, int sign, VarId dropped) {
        const std::size_t row = *x.index_of(facet) - below;
        diff.entries.push_back({static_cast<int>(row), static_cast<int>(g - first), sign, Monomial::variable(dropped)});
      });
    }
    out.differentials.push_back(std::move(diff));
  }
  return out;
}

// Taylor complex of an ideal: one generator per nonempty subset of G(I),
// labeled by the lcm. Small inputs only; used as a non-minimal reference.
inline ChainComplex taylor_complex(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.size();
  if (r == 0) throw ConstructionError("Taylor complex of the zero ideal");
  if (r > 16) throw SizeCapError("Taylor complex limited to 16 generators, got " + std::to_string(r));
  const std::uint32_t full = (1u << r) - 1;
  std::vector<std::vector<std::uint32_t>> by_size(r + 1);
  for (std::uint32_t s = 1; s <= full; ++s) by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  std::vector<Monomial> labels(full + 1);
  std::vector<int> position(full + 1, -1);
  ChainComplex out;
  for (std::size_t k = 1; k <= r; ++k) {
    GradedFreeModule mod;
    mod.index = static_cast<int>(k - 1);
    for (std::uint32_t s : by_size[k]) {
      Monomial l;
      for (std::size_t i = 0; i < r; ++i) {
        if (s & (1u << i)) l = lcm(l, ideal.gens()[i]);
      }
      labels[s] = l;
      position[s] = static_cast<int>(mod.generators.size());
      mod.generators.push_back({Cell(), l, l.degree()});
    }
    out.modules.push_back(std::move(mod));
  }
  for (std::size_t k = 2; k <= r; ++k) {
    Differential diff;
    diff.index = static_cast<int>(k - 1);
    diff.rows = static_cast<int>(by_size[k - 1].size());
    diff.cols = static_cast<int>(by_size[k].size());
    for (std::uint32_t s : by_size[k]) {
      int p = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(s & (1u << i))) continue;
        const std::uint32_t f = s & ~(1u << i);
        diff.entries.push_back({position[f], position[s], p % 2 == 0 ? 1 : -1, quotient(labels[s], labels[f])});
        ++p;
      }
    }
    out.differentials.push_back(std::move(diff));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betti tables

class BettiTable {
 public:
  void add(int i, const Monomial& b, long count = 1) {
    if (count == 0) return;
    auto& slot = entries_[{i, b}];
    slot += count;
    if (slot == 0) entries_.erase({i, b});
  }

  // Multigraded entry β_{i,b}.
  long at(int i, const Monomial& b) const {
    auto it = entries_.find({i, b});
    return it == entries_.end() ? 0 : it->second;
  }

  // Coarse entry β_{i,j} = Σ_{|b| = j} β_{i,b}.
  long at(int i, int j) const {
    long total = 0;
    for (const auto& [key, v] : entries_) {
      if (key.first == i && key.second.degree() == j) total += v;
    }
    return total;
  }

  std::map<std::pair<int, int>, long> coarse() const {
    std::map<std::pair<int, int>, long> out;
    for (const auto& [key, v] : entries_) out[{key.first, key.second.degree()}] += v;
    return out;
  }

  const std::map<std::pair<int, Monomial>, long>& multigraded() const { return entries_; }

  bool empty() const { return entries_.empty(); }

  // Largest homological index with a nonzero entry, -1 if empty.
  int length() const {
    int out = -1;
    for (const auto& [key, v] : entries_) out = std::max(out, key.first);
    return out;
  }

  // Σ_j β_{i,j} per homological index.
  std::vector<long> totals() const {
    std::vector<long> out(static_cast<std::size_t>(length() + 1), 0);
    for (const auto& [key, v] : entries_) out[static_cast<std::size_t>(key.first)] += v;
    return out;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, Monomial>, long> entries_;
};

// β_{i,j} = 0 unless j = i + t.
inline bool is_linear(const BettiTable& table, int t) {
  for (const auto& [key, v] : table.coarse()) {
    if (v != 0 && key.second != key.first + t) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Certification

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;            // items inspected
  std::vector<std::string> failures;  // human-readable offenders, capped
};

namespace detail {

inline constexpr std::size_t kMaxReported = 20;

inline void record_failure(CheckReport& r, std::string what) {
  r.passed = false;
  if (r.failures.size() < kMaxReported) r.failures.push_back(std::move(what));
}

inline std::string generator_name(const GradedFreeModule& mod, int idx) {
  const auto& g = mod.generators[static_cast<std::size_t>(idx)];
  if (!g.cell.factors().empty()) return to_string(g.cell);
  return "F" + std::to_string(mod.index) + "[" + std::to_string(idx) + "] " + to_string(g.multidegree);
}

}  // namespace detail

// d_{i-1} ∘ d_i = 0, expanded symbolically: per (generator, codim-2 target),
// the signed sum of coefficient products must cancel monomial by monomial.
namespace detail {

// Every entry of d_i is m_col / m_row, so d_{i} d_{i+1} is an integer multiple
// of a single monomial at each position.
inline bool homogeneous(const ChainComplex& c) {
  for (const auto& d : c.differentials) {
    const auto& rows = c.modules[static_cast<std::size_t>(d.index - 1)].generators;
    const auto& cols = c.modules[static_cast<std::size_t>(d.index)].generators;
    for (const auto& e : d.entries) {
      if (e.coefficient * rows[static_cast<std::size_t>(e.row)].multidegree !=
          cols[static_cast<std::size_t>(e.col)].multidegree) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

inline CheckReport check_d2(const ChainComplex& c) {
  CheckReport report{"d2", true, 0, {}};
  const bool graded = detail::homogeneous(c);
  for (std::size_t k = 1; k < c.differentials.size(); ++k) {
    const Differential& upper = c.differentials[k];     // d_{k+1}
    const Differential& lower = c.differentials[k - 1]; // d_k
    std::vector<std::vector<const DifferentialEntry*>> lower_cols(static_cast<std::size_t>(lower.cols));
    for (const auto& e : lower.entries) lower_cols[static_cast<std::size_t>(e.col)].push_back(&e);
    std::vector<std::vector<const DifferentialEntry*>> upper_cols(static_cast<std::size_t>(upper.cols));
    for (const auto& e : upper.entries) upper_cols[static_cast<std::size_t>(e.col)].push_back(&e);
    auto fail = [&](int col, int row, long coeff, const Monomial& mono) {
      detail::record_failure(report, "d^2 nonzero at " + detail::generator_name(c.modules[k + 1], col) + " -> " +
                                         detail::generator_name(c.modules[k - 1], row) + ": " +
                                         std::to_string(coeff) + "*" + to_string(mono));
    };
    for (int col = 0; col < upper.cols; ++col) {
      if (graded) {
        std::map<int, long> acc;
        for (const auto* e1 : upper_cols[static_cast<std::size_t>(col)]) {
          for (const auto* e2 : lower_cols[static_cast<std::size_t>(e1->row)]) acc[e2->row] += e1->sign * e2->sign;
        }
        for (const auto& [row, coeff] : acc) {
          ++report.checked;
          if (coeff == 0) continue;
          const Monomial mono = quotient(c.modules[k + 1].generators[static_cast<std::size_t>(col)].multidegree,
                                         c.modules[k - 1].generators[static_cast<std::size_t>(row)].multidegree);
          fail(col, row, coeff, mono);
        }
        continue;
      }
      std::map<int, std::map<Monomial, long>> acc;
      for (const auto* e1 : upper_cols[static_cast<std::size_t>(col)]) {
        for (const auto* e2 : lower_cols[static_cast<std::size_t>(e1->row)]) {
          acc[e2->row][e1->coefficient * e2->coefficient] += e1->sign * e2->sign;
        }
      }
      for (const auto& [row, poly] : acc) {
        ++report.checked;
        for (const auto& [mono, coeff] : poly) {
          if (coeff != 0) fail(col, row, coeff, mono);
        }
      }
    }
  }
  return report;
}

// No incident codim-1 pair shares a label.
inline CheckReport check_minimal(const LabeledComplex& x) {
  CheckReport report{"minimal", true, 0, {}};
  for (const Cell& c : x.cells()) {
    const Monomial label = c.label();
    for_each_facet(c, [&](const Cell& facet, int, VarId) {
      ++report.checked;
      if (facet.label() == label) {
        detail::record_failure(report, "equal labels on " + to_string(c) + " > " + to_string(facet));
      }
    });
  }
  return report;
}

// No differential entry is a unit.
inline CheckReport check_minimal(const ChainComplex& c) {
  CheckReport report{"minimal", true, 0, {}};
  for (const auto& d : c.differentials) {
    for (const auto& e : d.entries) {
      ++report.checked;
      if (e.coefficient.is_one()) {
        detail::record_failure(report, "unit entry in d_" + std::to_string(d.index) + " at " +
                                           detail::generator_name(c.modules[static_cast<std::size_t>(d.index)], e.col) +
                                           " -> " +
                                           detail::generator_name(c.modules[static_cast<std::size_t>(d.index - 1)], e.row));
      }
    }
  }
  return report;
}

// Reduced homology of X restricted below one multidegree.
struct DegreeHomology {
  Monomial degree;
  std::vector<long> reduced_betti;  // entry k is dim H̃_{k-1}
  bool acyclic() const {
    return std::all_of(reduced_betti.begin(), reduced_betti.end(), [](long v) { return v == 0; });
  }
};

struct AcyclicityReport {
  CheckReport check{"acyclic", true, 0, {}};
  std::uint32_t characteristic = 0;
  std::vector<DegreeHomology> degrees;  // sorted by (total degree, monomial)
  std::optional<DegreeHomology> first_failure;
};

// Closure of the given squarefree masks under pairwise lcm (bitwise or).
inline std::vector<std::uint64_t> lcm_lattice(const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> seen(gens.begin(), gens.end());
  std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t a : frontier) {
      for (std::uint64_t g : gens) {
        if (seen.insert(a | g).second) next.push_back(a | g);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// For every degree b in the lcm lattice of the vertex labels, the subcomplex
// of cells with label dividing b must have vanishing reduced homology over
// the given field. Boundary coefficients are taken with monomials set to 1.
template <CoefficientField Field>
AcyclicityReport check_acyclic(const LabeledComplex& x, const Field& field) {
  AcyclicityReport report;
  report.characteristic = field.characteristic();
  if (x.empty()) return report;
  const SquarefreeEncoder enc(x.variables());
  const std::size_t ncells = x.size();
  std::vector<std::uint64_t> label(ncells);
  std::vector<std::vector<std::pair<std::size_t, int>>> facets(ncells);
  std::vector<int> dims(ncells);
  for (std::size_t i = 0; i < ncells; ++i) {
    const Cell& c = x.cells()[i];
    dims[i] = c.dim();
    label[i] = enc.encode(c.label());
    for_each_facet(c, [&](const Cell& facet, int sign, VarId) { facets[i].emplace_back(*x.index_of(facet), sign); });
    std::sort(facets[i].begin(), facets[i].end());
  }
  std::vector<std::uint64_t> vertex_masks;
  const auto [v0, v1] = x.dim_range(0);
  for (std::size_t i = v0; i < v1; ++i) vertex_masks.push_back(label[i]);
  std::vector<std::pair<Monomial, std::uint64_t>> degrees;
  for (std::uint64_t b : lcm_lattice(vertex_masks)) degrees.emplace_back(enc.decode(b), b);
  std::sort(degrees.begin(), degrees.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first < b.first;
  });
  const int top = x.dimension();
  report.degrees = parallel_map<DegreeHomology>(degrees.size(), [&](std::size_t k) {
    const std::uint64_t b = degrees[k].second;
    SignedBoundary sb(static_cast<std::size_t>(top + 1));
    // Only cells below b are read back, and their faces are below b too, so
    // stale entries from another degree are never seen.
    thread_local std::vector<int> local;
    if (local.size() < ncells) local.resize(ncells);
    for (std::size_t i = 0; i < ncells; ++i) {
      if ((label[i] & ~b) != 0) continue;
      const auto d = static_cast<std::size_t>(dims[i]);
      local[i] = sb.add_cell(d);
      for (const auto& [f, s] : facets[i]) sb.add_facet(d, local[f], s);
    }
    sb.trim();
    return DegreeHomology{degrees[k].first, reduced_betti(sb, field)};
  });
  for (const auto& dh : report.degrees) {
    ++report.check.checked;
    if (!dh.acyclic()) {
      if (!report.first_failure) report.first_failure = dh;
      std::string dims;
      for (std::size_t k = 0; k < dh.reduced_betti.size(); ++k) {
        if (dh.reduced_betti[k] != 0) {
          dims += " H~_" + std::to_string(static_cast<long>(k) - 1) + "=" + std::to_string(dh.reduced_betti[k]);
        }
      }
      detail::record_failure(report.check, "degree " + to_string(dh.degree) + ":" + dims);
    }
  }
  return report;
}

inline AcyclicityReport check_acyclic(const LabeledComplex& x, std::uint32_t prime = kDefaultPrime) {
  return check_acyclic(x, PrimeField(prime));
}

// Reduced homology of the whole complex; entry k is dim H̃_{k-1}.
template <CoefficientField Field>
std::vector<long> reduced_homology(const LabeledComplex& x, const Field& field) {
  SignedBoundary sb(static_cast<std::size_t>(x.dimension() + 1));
  std::vector<std::pair<int, int>> col;
  for (const Cell& c : x.cells()) {
    const auto d = static_cast<std::size_t>(c.dim());
    sb.add_cell(d);
    if (d == 0) continue;
    const std::size_t below = x.dim_range(c.dim() - 1).first;
    col.clear();
    for_each_facet(c, [&](const Cell& facet, int sign, VarId) {
      col.emplace_back(static_cast<int>(*x.index_of(facet) - below), sign);
    });
    std::sort(col.begin(), col.end());
    for (const auto& [row, sign] : col) sb.add_facet(d, row, sign);
  }
  return reduced_betti(sb, field);
}

// β_{i,b} = number of i-cells labeled b. Refuses complexes that are not
// minimal, since then cell counts overstate the Betti numbers.
inline BettiTable betti_table(const LabeledComplex& x) {
  const CheckReport minimal = check_minimal(x);
  if (!minimal.passed) {
    throw ConstructionError("complex is not minimal; first violation: " + minimal.failures.front());
  }
  BettiTable table;
  for (const Cell& c : x.cells()) table.add(c.dim(), c.label());
  return table;
}

// Polynomials with integer coefficients, keyed by monomial.
using Polynomial = std::map<Monomial, long>;

struct HilbertReport {
  CheckReport check{"hilbert", true, 0, {}};
  Polynomial cellular;    // Σ_F (-1)^dim F x^{a_F}
  Polynomial inclusion;   // Σ_{∅≠S⊆G(I)} (-1)^{|S|+1} x^{lcm S}
};

inline constexpr std::size_t kHilbertGeneratorCap = 20;

// Inclusion-exclusion numerator of the ideal, computed from G(I) alone.
inline Polynomial inclusion_exclusion_numerator(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.size();
  if (r > kHilbertGeneratorCap) {
    throw SizeCapError("inclusion-exclusion limited to " + std::to_string(kHilbertGeneratorCap) +
                       " generators, got " + std::to_string(r));
  }
  Polynomial out;
  const bool squarefree = std::all_of(ideal.gens().begin(), ideal.gens().end(),
                                      [](const Monomial& g) { return g.is_squarefree(); });
  const auto vars = ideal.variables();
  if (squarefree && vars.size() <= 64) {
    const SquarefreeEncoder enc(vars);
    std::vector<std::uint64_t> g;
    for (const auto& m : ideal.gens()) g.push_back(enc.encode(m));
    std::unordered_map<std::uint64_t, long> acc;
    auto recurse = [&](auto&& self, std::size_t i, std::uint64_t l, int sign) -> void {
      for (std::size_t k = i; k < r; ++k) {
        acc[l | g[k]] += sign;
        self(self, k + 1, l | g[k], -sign);
      }
    };
    recurse(recurse, 0, 0, 1);
    for (const auto& [mask, c] : acc) {
      if (c != 0) out[enc.decode(mask)] += c;
    }
  } else {
    auto recurse = [&](auto&& self, std::size_t i, const Monomial& l, int sign) -> void {
      for (std::size_t k = i; k < r; ++k) {
        const Monomial next = lcm(l, ideal.gens()[k]);
        out[next] += sign;
        self(self, k + 1, next, -sign);
      }
    };
    recurse(recurse, 0, Monomial(), 1);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline HilbertReport hilbert_numerator_check(const LabeledComplex& x, const MonomialIdeal& ideal) {
  HilbertReport report;
  for (const Cell& c : x.cells()) report.cellular[c.label()] += (c.dim() % 2 == 0) ? 1 : -1;
  std::erase_if(report.cellular, [](const auto& kv) { return kv.second == 0; });
  report.inclusion = inclusion_exclusion_numerator(ideal);
  std::set<Monomial> keys;
  for (const auto& kv : report.cellular) keys.insert(kv.first);
  for (const auto& kv : report.inclusion) keys.insert(kv.first);
  for (const Monomial& k : keys) {
    ++report.check.checked;
    const long a = report.cellular.count(k) ? report.cellular.at(k) : 0;
    const long b = report.inclusion.count(k) ? report.inclusion.at(k) : 0;
    if (a != b) {
      detail::record_failure(report.check, to_string(k) + ": complex " + std::to_string(a) + " vs ideal " +
                                               std::to_string(b));
    }
  }
  return report;
}

}  // namespace tmi

#endif  // TMI_RESOLUTION_HPP
