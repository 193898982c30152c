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

// Ground truth computed from the ideal alone, with no cell complex involved:
// multigraded Betti numbers via upper Koszul simplicial complexes
//   K^b(I) = { S ⊆ supp(b) : x^b / x_S ∈ I },   β_{i,b}(I) = dim H̃_{i-1}(K^b(I)),
// and brute-force matroid exchange checks on the generator supports.
#ifndef TMI_ORACLE_HPP
#define TMI_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tmi/error.hpp"
#include "tmi/homology.hpp"
#include "tmi/linalg.hpp"
#include "tmi/monomial.hpp"
#include "tmi/parallel.hpp"
#include "tmi/resolution.hpp"

namespace tmi {

inline constexpr std::size_t kOracleVariableCap = 16;

// A simplicial complex as its list of faces (each sorted), the empty face
// included when present. Faces are ordered by size, then lexicographically.
using SimplicialComplex = std::vector<std::vector<VarId>>;

inline SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
  const auto supp = b.support();
  if (supp.size() > 30) throw SizeCapError("upper Koszul complex on more than 30 variables");
  SimplicialComplex out;
  const std::uint32_t full = (1u << supp.size());
  for (std::uint32_t s = 0; s < full; ++s) {
    std::vector<VarId> face;
    std::vector<Monomial::Term> rest;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      const int e = b.exponent(supp[i]);
      if (s & (1u << i)) {
        face.push_back(supp[i]);
        if (e > 1) rest.emplace_back(supp[i], e - 1);
      } else {
        rest.emplace_back(supp[i], e);
      }
    }
    if (ideal.contains(Monomial(std::move(rest)))) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& c) {
    if (a.size() != c.size()) return a.size() < c.size();
    return a < c;
  });
  return out;
}

namespace detail {

// Reduced Betti numbers of a simplicial complex on at most 32 vertices whose
// faces are given as bitmasks (empty face excluded; `has_empty` says whether
// the empty face is present).
template <CoefficientField Field>
std::vector<long> simplicial_reduced_betti(const std::vector<std::uint32_t>& faces, bool has_empty,
                                           const Field& field) {
  std::size_t top = 0;
  for (std::uint32_t f : faces) top = std::max<std::size_t>(top, static_cast<std::size_t>(__builtin_popcount(f)));
  SignedBoundary sb(top);
  sb.augmented = has_empty;
  std::unordered_map<std::uint32_t, int> index;
  index.reserve(faces.size() * 2);
  std::vector<std::uint32_t> sorted = faces;
  std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t f : sorted) {
    const auto d = static_cast<std::size_t>(__builtin_popcount(f) - 1);
    index[f] = sb.add_cell(d);
    std::vector<std::pair<int, int>> col;
    if (d > 0) {
      int p = 0;
      for (std::uint32_t rest = f; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const auto it = index.find(f & ~bit);
        if (it == index.end()) throw ConstructionError("face set is not closed under subsets");
        col.emplace_back(it->second, p % 2 == 0 ? 1 : -1);
        ++p;
      }
    }
    std::sort(col.begin(), col.end());
    for (const auto& [row, sign] : col) sb.add_facet(d, row, sign);
  }
  return reduced_betti(sb, field);
}

inline void add_homology(BettiTable& table, const Monomial& b, const std::vector<long>& reduced) {
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (reduced[k] != 0) table.add(static_cast<int>(k), b, reduced[k]);
  }
}

}  // namespace detail

// Full multigraded Betti table of I by sweeping every divisor b of
// lcm(G(I)). Squarefree ideals use a bitmask membership table over the
// support; other ideals fall back to divisibility tests.
template <CoefficientField Field>
BettiTable betti_oracle(const MonomialIdeal& ideal, const Field& field) {
  const auto vars = ideal.variables();
  if (vars.size() > kOracleVariableCap) {
    throw SizeCapError("oracle limited to " + std::to_string(kOracleVariableCap) + " variables, got " +
                       std::to_string(vars.size()));
  }
  BettiTable table;
  if (ideal.empty()) return table;
  const bool squarefree = std::all_of(ideal.gens().begin(), ideal.gens().end(),
                                      [](const Monomial& g) { return g.is_squarefree(); });
  if (squarefree) {
    const SquarefreeEncoder enc(vars);
    const std::size_t u = enc.size();
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << u) - 1);
    std::vector<char> member(std::size_t{full} + 1, 0);
    for (const auto& g : ideal.gens()) member[enc.encode(g)] = 1;
    for (std::size_t bit = 0; bit < u; ++bit) {
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (member[mask] && !(mask & (1u << bit))) member[mask | (1u << bit)] = 1;
      }
    }
    std::vector<std::uint32_t> degrees;
    for (std::uint32_t b = 0; b <= full; ++b) {
      if (member[b]) degrees.push_back(b);
    }
    const auto results = parallel_map<std::vector<long>>(degrees.size(), [&](std::size_t k) {
      const std::uint32_t b = degrees[k];
      std::vector<std::uint32_t> faces;
      // Nonempty S ⊆ b with b \ S still in I.
      for (std::uint32_t s = b; s; s = (s - 1) & b) {
        if (member[b & ~s]) faces.push_back(s);
      }
      return detail::simplicial_reduced_betti(faces, true, field);
    });
    for (std::size_t k = 0; k < degrees.size(); ++k) detail::add_homology(table, enc.decode(degrees[k]), results[k]);
    return table;
  }

  Monomial top;
  for (const auto& g : ideal.gens()) top = lcm(top, g);
  std::vector<Monomial> degrees{Monomial()};
  for (const auto& [v, e] : top.terms()) {
    std::vector<Monomial> next;
    for (const auto& d : degrees) {
      for (int k = 0; k <= e; ++k) next.push_back(k ? d * Monomial({{v, k}}) : d);
    }
    degrees = std::move(next);
    if (degrees.size() > (std::size_t{1} << 20)) throw SizeCapError("oracle degree sweep exceeds 2^20 divisors");
  }
  const auto results = parallel_map<std::vector<long>>(degrees.size(), [&](std::size_t k) {
    const Monomial& b = degrees[k];
    if (!ideal.contains(b)) return std::vector<long>{};
    const auto kb = upper_koszul(ideal, b);
    const auto supp = b.support();
    std::vector<std::uint32_t> faces;
    bool has_empty = false;
    for (const auto& face : kb) {
      if (face.empty()) {
        has_empty = true;
        continue;
      }
      std::uint32_t mask = 0;
      for (VarId v : face) mask |= 1u << (std::lower_bound(supp.begin(), supp.end(), v) - supp.begin());
      faces.push_back(mask);
    }
    return detail::simplicial_reduced_betti(faces, has_empty, field);
  });
  for (std::size_t k = 0; k < degrees.size(); ++k) detail::add_homology(table, degrees[k], results[k]);
  return table;
}

inline BettiTable betti_oracle(const MonomialIdeal& ideal, std::uint32_t prime = kDefaultPrime) {
  return betti_oracle(ideal, PrimeField(prime));
}

namespace detail {

inline std::vector<std::uint64_t> facet_masks(const MonomialIdeal& ideal, const char* who) {
  if (ideal.empty()) return {};
  const int deg = ideal.gens().front().degree();
  for (const auto& g : ideal.gens()) {
    if (!g.is_squarefree() || g.degree() != deg) {
      throw ParameterError(std::string(who) + " needs squarefree generators of one degree");
    }
  }
  const SquarefreeEncoder enc(ideal.variables());
  std::vector<std::uint64_t> out;
  for (const auto& g : ideal.gens()) out.push_back(enc.encode(g));
  return out;
}

template <class Candidates>
bool exchange_holds(const MonomialIdeal& ideal, const char* who, Candidates candidates) {
  const auto facets = facet_masks(ideal, who);
  const std::set<std::uint64_t> lookup(facets.begin(), facets.end());
  for (std::uint64_t f : facets) {
    for (std::uint64_t g : facets) {
      if (f == g) continue;
      for (std::uint64_t is = f; is; is &= is - 1) {
        const std::uint64_t i = is & (~is + 1);
        if (!candidates(f, g, i, lookup)) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// For distinct facets F, G and every i ∈ F, some j ∈ G makes (F \ i) ∪ j a facet.
inline bool matroid_exchange(const MonomialIdeal& ideal) {
  return detail::exchange_holds(ideal, "matroid_exchange",
                                [](std::uint64_t f, std::uint64_t g, std::uint64_t i, const auto& lookup) {
                                  for (std::uint64_t js = g; js; js &= js - 1) {
                                    const std::uint64_t j = js & (~js + 1);
                                    if (lookup.count((f & ~i) | j)) return true;
                                  }
                                  return false;
                                });
}

// For distinct facets F, G, every i ∈ F and every j ∈ G \ F, (F \ i) ∪ j is a facet.
inline bool strong_exchange(const MonomialIdeal& ideal) {
  return detail::exchange_holds(ideal, "strong_exchange",
                                [](std::uint64_t f, std::uint64_t g, std::uint64_t i, const auto& lookup) {
                                  for (std::uint64_t js = g & ~f; js; js &= js - 1) {
                                    const std::uint64_t j = js & (~js + 1);
                                    if (!lookup.count((f & ~i) | j)) return false;
                                  }
                                  return true;
                                });
}

}  // namespace tmi

#endif  // TMI_ORACLE_HPP
