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

// Sparse exact linear algebra: column-reduction rank over a prime field or
// over the rationals.
#ifndef TMI_LINALG_HPP
#define TMI_LINALG_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tmi/error.hpp"

namespace tmi {

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw ParameterError("modulus must be a prime below 2^31, got " + std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }

  value_type from_int(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  static bool is_zero(value_type a) { return a == 0; }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + b) % p_); }
  value_type sub(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>((std::uint64_t{a} * b) % p_); }

  value_type inv(value_type a) const {
    if (a == 0) throw ParameterError("inverse of zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

 private:
  std::uint32_t p_;
};

// The rationals, exact. Slow; used for cross-checking characteristic-free claims.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  std::uint32_t characteristic() const { return 0; }
  value_type from_int(std::int64_t v) const { return value_type(v); }
  static bool is_zero(const value_type& a) { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw ParameterError("inverse of zero");
    return value_type(1) / a;
  }
};

// Column-major sparse matrix. Each column is kept sorted by row with no
// explicit zeros.
// Exact coefficient fields usable by the rank and homology routines.
template <class F>
concept CoefficientField = requires(const F& f, std::int64_t v) {
  typename F::value_type;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  f.from_int(v);
};

template <class Field>
class SparseMatrix {
 public:
  using value_type = typename Field::value_type;
  using Entry = std::pair<int, value_type>;
  using Column = std::vector<Entry>;

  SparseMatrix(int rows, int cols, Field field = Field())
      : field_(std::move(field)), rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Column& column(int c) const { return columns_[static_cast<std::size_t>(c)]; }

  // Adds v to entry (r, c).
  void add(int r, int c, std::int64_t v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ParameterError("matrix index out of range");
    auto& col = columns_[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const Entry& e, int row) { return e.first < row; });
    const value_type x = field_.from_int(v);
    if (it != col.end() && it->first == r) {
      it->second = field_.add(it->second, x);
      if (Field::is_zero(it->second)) col.erase(it);
    } else if (!Field::is_zero(x)) {
      col.insert(it, Entry(r, x));
    }
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Column> columns_;
};

using PrimeFieldMatrix = SparseMatrix<PrimeField>;
using RationalMatrix = SparseMatrix<RationalField>;

// Left-to-right column reduction keyed on the lowest nonzero row over `rows`
// rows. fill(c, col) writes column c, sorted by row, into col. Returns the
// pivot row of every column that survives; their count is the rank. Each
// surviving column is normalized so its lowest entry is 1.
template <CoefficientField Field, class Fill>
std::vector<int> reduce_columns(const Field& f, int rows, int cols, Fill&& fill) {
  using value_type = typename Field::value_type;
  using Column = std::vector<std::pair<int, value_type>>;
  std::vector<int> pivot_col(static_cast<std::size_t>(rows), -1);
  // Reduced columns never change once stored, so they share one pool.
  std::vector<std::pair<int, value_type>> pool;
  std::vector<std::size_t> starts;
  std::vector<int> pivots;
  Column col, scratch;
  for (int c = 0; c < cols; ++c) {
    col.clear();
    fill(c, col);
    while (!col.empty()) {
      const int low = col.back().first;
      const int pc = pivot_col[static_cast<std::size_t>(low)];
      if (pc < 0) break;
      const std::size_t pb = starts[static_cast<std::size_t>(pc)];
      const std::size_t pe = static_cast<std::size_t>(pc) + 1 < starts.size() ? starts[static_cast<std::size_t>(pc) + 1]
                                                                               : pool.size();
      const value_type factor = col.back().second;  // pivot's low entry is 1
      scratch.clear();
      std::size_t i = 0, j = pb;
      while (i < col.size() || j < pe) {
        if (j == pe || (i < col.size() && col[i].first < pool[j].first)) {
          scratch.push_back(std::move(col[i++]));
        } else if (i == col.size() || pool[j].first < col[i].first) {
          scratch.emplace_back(pool[j].first, f.sub(f.from_int(0), f.mul(factor, pool[j].second)));
          ++j;
        } else {
          value_type v = f.sub(col[i].second, f.mul(factor, pool[j].second));
          if (!Field::is_zero(v)) scratch.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      std::swap(col, scratch);
    }
    if (col.empty()) continue;
    const value_type scale = f.inv(col.back().second);
    pivot_col[static_cast<std::size_t>(col.back().first)] = static_cast<int>(starts.size());
    pivots.push_back(col.back().first);
    starts.push_back(pool.size());
    for (auto& e : col) pool.emplace_back(e.first, f.mul(e.second, scale));
  }
  return pivots;
}

template <class Field>
std::vector<int> reduction_pivots(const SparseMatrix<Field>& m) {
  return reduce_columns(m.field(), m.rows(), m.cols(), [&](int c, auto& col) {
    const auto& src = m.column(c);
    col.assign(src.begin(), src.end());
  });
}

template <class Field>
std::size_t rank(const SparseMatrix<Field>& m) {
  return reduction_pivots(m).size();
}

inline std::size_t rank_gf(const PrimeFieldMatrix& m) { return rank(m); }

}  // namespace tmi

#endif  // TMI_LINALG_HPP
