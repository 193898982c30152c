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

// Variables, monomials and monomial ideals over the block-structured ring
// k[x_{11},...,x_{1b_1},...,x_{n1},...,x_{nb_n}].
#ifndef TMI_MONOMIAL_HPP
#define TMI_MONOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmi/error.hpp"

namespace tmi {

// The variable x_{block,index}; both coordinates are 1-based. The defaulted
// comparison is the (block, index) lexicographic order used everywhere.
struct VarId {
  int block = 0;
  int index = 0;

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

// Parameters of I_{n,t}: n blocks of sizes b_1..b_n and transversal degree t.
class BlockConfig {
 public:
  BlockConfig() = default;

  BlockConfig(int n, int t, std::vector<int> sizes)
      : n_(n), t_(t), sizes_(std::move(sizes)) {
    if (n_ < 1) throw ParameterError("n must be positive, got " + std::to_string(n_));
    if (static_cast<int>(sizes_.size()) != n_) {
      throw ParameterError("expected " + std::to_string(n_) + " block sizes, got " +
                           std::to_string(sizes_.size()));
    }
    if (t_ < 1 || t_ > n_) {
      throw ParameterError("t must satisfy 1 <= t <= n, got t=" + std::to_string(t_) +
                           " n=" + std::to_string(n_));
    }
    for (int s : sizes_) {
      if (s < 1) throw ParameterError("block sizes must be positive, got " + std::to_string(s));
    }
  }

  int n() const { return n_; }
  int t() const { return t_; }
  const std::vector<int>& sizes() const { return sizes_; }
  int size(int block) const { return sizes_.at(static_cast<std::size_t>(block - 1)); }
  int m() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

  // The canonical normalization b_1 <= ... <= b_n. Other orders are accepted;
  // callers surface this as a warning.
  bool weakly_increasing() const { return std::is_sorted(sizes_.begin(), sizes_.end()); }

  // Same block sizes restricted to the first p blocks, degree q.
  BlockConfig prefix(int p, int q) const {
    if (p < 1 || p > n_) throw ParameterError("prefix length out of range: " + std::to_string(p));
    return BlockConfig(p, q, std::vector<int>(sizes_.begin(), sizes_.begin() + p));
  }

  BlockConfig with_degree(int q) const { return BlockConfig(n_, q, sizes_); }

  // All variables in canonical order.
  std::vector<VarId> variables() const {
    std::vector<VarId> out;
    for (int j = 1; j <= n_; ++j) {
      for (int a = 1; a <= size(j); ++a) out.push_back({j, a});
    }
    return out;
  }

  // 0-based position of v in variables().
  int offset(VarId v) const {
    if (v.block < 1 || v.block > n_ || v.index < 1 || v.index > size(v.block)) {
      throw ParameterError("variable out of range for this block configuration");
    }
    int off = 0;
    for (int j = 1; j < v.block; ++j) off += size(j);
    return off + v.index - 1;
  }

  friend bool operator==(const BlockConfig&, const BlockConfig&) = default;

 private:
  int n_ = 0;
  int t_ = 0;
  std::vector<int> sizes_;
};

// A monomial as a sparse exponent vector. Exponents are positive; the
// variable list is strictly increasing.
class Monomial {
 public:
  using Term = std::pair<VarId, int>;

  Monomial() = default;

  explicit Monomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    for (const auto& [v, e] : terms_) {
      if (e < 0) throw ParameterError("negative exponent");
      if (e == 0) continue;
      if (!merged.empty() && merged.back().first == v) {
        merged.back().second += e;
      } else {
        merged.emplace_back(v, e);
      }
    }
    terms_ = std::move(merged);
  }

  static Monomial variable(VarId v) { return Monomial({{v, 1}}); }

  // Squarefree product of the given variables (duplicates collapse).
  static Monomial product_of(const std::vector<VarId>& vars) {
    std::vector<VarId> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Monomial out;
    for (VarId v : sorted) out.terms_.emplace_back(v, 1);
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_one() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& term : terms_) d += term.second;
    return d;
  }

  int exponent(VarId v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const Term& a, VarId b) { return a.first < b; });
    return (it != terms_.end() && it->first == v) ? it->second : 0;
  }

  std::vector<VarId> support() const {
    std::vector<VarId> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back(term.first);
    return out;
  }

  bool is_squarefree() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
  }

  // Variables repeated by multiplicity, increasing.
  std::vector<VarId> expanded() const {
    std::vector<VarId> out;
    for (const auto& [v, e] : terms_) out.insert(out.end(), static_cast<std::size_t>(e), v);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Canonical order: lexicographic on the expanded variable sequences.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    int ea = 0, eb = 0;  // copies of a, b consumed from the current terms
    while (true) {
      const bool a_done = i == a.terms_.size();
      const bool b_done = j == b.terms_.size();
      if (a_done || b_done) {
        if (a_done && b_done) return std::strong_ordering::equal;
        return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
      }
      const VarId va = a.terms_[i].first;
      const VarId vb = b.terms_[j].first;
      if (va != vb) return va <=> vb;
      if (++ea == a.terms_[i].second) { ++i; ea = 0; }
      if (++eb == b.terms_[j].second) { ++j; eb = 0; }
    }
  }

 private:
  std::vector<Term> terms_;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Monomial(std::move(terms));
}

// Componentwise <= of exponent vectors.
inline bool divides(const Monomial& a, const Monomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t j = 0;
  for (const auto& [v, e] : ta) {
    while (j < tb.size() && tb[j].first < v) ++j;
    if (j == tb.size() || tb[j].first != v || tb[j].second < e) return false;
  }
  return true;
}

// Componentwise max.
inline Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      out.push_back(tb[j++]);
    } else {
      out.emplace_back(ta[i].first, std::max(ta[i].second, tb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(out));
}

// a / b; requires divides(b, a).
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw ParameterError("quotient of non-divisible monomials");
  std::vector<Monomial::Term> out;
  for (const auto& [v, e] : a.terms()) {
    const int r = e - b.exponent(v);
    if (r > 0) out.emplace_back(v, r);
  }
  return Monomial(std::move(out));
}

// A monomial ideal held by its unique minimal generating set, sorted in the
// canonical monomial order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  explicit MonomialIdeal(std::vector<Monomial> gens) : gens_(minimal_set(std::move(gens))) {}

  const std::vector<Monomial>& gens() const& { return gens_; }
  std::vector<Monomial> gens() && { return std::move(gens_); }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }

  std::vector<VarId> variables() const {
    std::vector<VarId> out;
    for (const auto& g : gens_) {
      for (const auto& term : g.terms()) out.push_back(term.first);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  static std::vector<Monomial> minimal_set(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      // Sorted by degree, so only earlier generators can divide g.
      const bool dominated =
          std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
      if (!dominated) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens) { return MonomialIdeal(std::move(gens)); }

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) gens.push_back(x * y);
  }
  return MonomialIdeal(std::move(gens));
}

inline MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) gens.push_back(lcm(x, y));
  }
  return MonomialIdeal(std::move(gens));
}

// I_{n,t}: all x_{j_1 a_1}...x_{j_t a_t} with j_1 < ... < j_t.
inline MonomialIdeal transversal_generators(const BlockConfig& cfg) {
  std::vector<Monomial> gens;
  std::vector<VarId> current;
  auto recurse = [&](auto&& self, int next_block) -> void {
    if (static_cast<int>(current.size()) == cfg.t()) {
      gens.push_back(Monomial::product_of(current));
      return;
    }
    const int remaining = cfg.t() - static_cast<int>(current.size());
    for (int j = next_block; j <= cfg.n() - remaining + 1; ++j) {
      for (int a = 1; a <= cfg.size(j); ++a) {
        current.push_back({j, a});
        self(self, j + 1);
        current.pop_back();
      }
    }
  };
  recurse(recurse, 1);
  return MonomialIdeal(std::move(gens));
}

// P_j = (x_{j1}, ..., x_{jb_j}).
inline MonomialIdeal prime_block(const BlockConfig& cfg, int j) {
  if (j < 1 || j > cfg.n()) throw ParameterError("block index out of range: " + std::to_string(j));
  std::vector<Monomial> gens;
  for (int a = 1; a <= cfg.size(j); ++a) gens.push_back(Monomial::variable({j, a}));
  return MonomialIdeal(std::move(gens));
}

// Q_r(s) = P_r + ... + P_s.
inline MonomialIdeal q_range(const BlockConfig& cfg, int r, int s) {
  if (r < 1 || s > cfg.n() || r > s) {
    throw ParameterError("q_range needs 1 <= r <= s <= n, got r=" + std::to_string(r) +
                         " s=" + std::to_string(s));
  }
  std::vector<Monomial> gens;
  for (int j = r; j <= s; ++j) {
    for (int a = 1; a <= cfg.size(j); ++a) gens.push_back(Monomial::variable({j, a}));
  }
  return MonomialIdeal(std::move(gens));
}

// Variables of blocks r..s, in canonical order.
inline std::vector<VarId> block_variables(const BlockConfig& cfg, int r, int s) {
  std::vector<VarId> out;
  for (int j = r; j <= s; ++j) {
    for (int a = 1; a <= cfg.size(j); ++a) out.push_back({j, a});
  }
  return out;
}

// Squarefree monomials over a fixed variable list (at most 64) as bitmasks;
// bit i stands for universe()[i].
class SquarefreeEncoder {
 public:
  explicit SquarefreeEncoder(std::vector<VarId> universe) : universe_(std::move(universe)) {
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
    if (universe_.size() > 64) throw SizeCapError("more than 64 variables in a squarefree encoding");
  }

  const std::vector<VarId>& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  std::uint64_t encode(const Monomial& m) const {
    std::uint64_t mask = 0;
    for (const auto& [v, e] : m.terms()) {
      if (e != 1) throw ParameterError("monomial is not squarefree: " + std::to_string(e));
      auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
      if (it == universe_.end() || *it != v) throw ParameterError("variable outside the encoder universe");
      mask |= std::uint64_t{1} << (it - universe_.begin());
    }
    return mask;
  }

  Monomial decode(std::uint64_t mask) const {
    std::vector<VarId> vars;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) vars.push_back(universe_[i]);
    }
    return Monomial::product_of(vars);
  }

 private:
  std::vector<VarId> universe_;
};

// ---------------------------------------------------------------------------
// Text format: factors `x[i,j]^e` joined by `*`; the unit monomial is `1`.

inline std::string to_string(VarId v, char letter = 'x') {
  return std::string(1, letter) + "[" + std::to_string(v.block) + "," + std::to_string(v.index) + "]";
}

inline std::string to_string(const Monomial& m, char letter = 'x') {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.terms()) {
    if (!out.empty()) out += '*';
    out += to_string(v, letter);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const MonomialIdeal& ideal, char letter = 'x') {
  std::string out;
  for (const auto& g : ideal.gens()) out += to_string(g, letter) + "\n";
  return out;
}

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos) {
  const std::size_t start = pos;
  int value = 0;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
    value = value * 10 + (s[pos] - '0');
    ++pos;
  }
  if (pos == start) throw ParameterError("expected an integer in monomial '" + std::string(s) + "'");
  return value;
}

}  // namespace detail

// Parses `x[i,j]^e*...`. Any single letter may prefix a factor; `x[i]` is
// shorthand for `x[i,1]`. Whitespace is ignored.
inline Monomial parse_monomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') s += c;
  }
  if (s == "1") return Monomial();
  if (s.empty()) throw ParameterError("empty monomial");
  std::vector<Monomial::Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (!std::isalpha(static_cast<unsigned char>(s[pos])) || pos + 1 >= s.size() || s[pos + 1] != '[') {
      throw ParameterError("malformed factor in monomial '" + s + "'");
    }
    pos += 2;
    VarId v;
    v.block = detail::parse_int(s, pos);
    v.index = 1;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      v.index = detail::parse_int(s, pos);
    }
    if (pos >= s.size() || s[pos] != ']') throw ParameterError("missing ']' in monomial '" + s + "'");
    ++pos;
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = detail::parse_int(s, pos);
    }
    if (v.block < 1 || v.index < 1) throw ParameterError("variable indices are 1-based in '" + s + "'");
    terms.emplace_back(v, e);
    if (pos < s.size()) {
      if (s[pos] != '*') throw ParameterError("expected '*' in monomial '" + s + "'");
      ++pos;
      if (pos == s.size()) throw ParameterError("trailing '*' in monomial '" + s + "'");
    }
  }
  return Monomial(std::move(terms));
}

}  // namespace tmi

#endif  // TMI_MONOMIAL_HPP
