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

#ifndef TMI_HOMOLOGY_HPP
#define TMI_HOMOLOGY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tmi/linalg.hpp"

namespace tmi {

// A finite chain complex with +-1 boundary coefficients, stored flat. Cells
// of each dimension are appended in order with add_cell(d) followed by the
// (row, sign) pairs of their boundary in terms of the (d-1)-cells, rows
// increasing. `augmented` adds the empty face in degree -1, as for a
// simplicial or polyhedral complex.
struct SignedBoundary {
  std::vector<std::size_t> counts;                       // cells per dimension
  std::vector<std::vector<std::pair<int, int>>> entries; // concatenated columns per dimension
  std::vector<std::vector<std::size_t>> starts;          // column c begins at entries[d][starts[d][c]]
  bool augmented = true;

  explicit SignedBoundary(std::size_t dims = 0) : counts(dims, 0), entries(dims), starts(dims) {}

  // Opens the next d-cell and returns its index among the d-cells.
  int add_cell(std::size_t d) {
    starts[d].push_back(entries[d].size());
    return static_cast<int>(counts[d]++);
  }

  void add_facet(std::size_t d, int row, int sign) { entries[d].emplace_back(row, sign); }

  std::pair<std::size_t, std::size_t> column(std::size_t d, std::size_t c) const {
    const std::size_t end = c + 1 < counts[d] ? starts[d][c + 1] : entries[d].size();
    return {starts[d][c], end};
  }

  // Drops trailing dimensions without cells.
  void trim() {
    while (!counts.empty() && counts.back() == 0) {
      counts.pop_back();
      entries.pop_back();
      starts.pop_back();
    }
  }
};

// Reduced Betti numbers; entry k is the dimension of H̃_{k-1}, for degrees
// -1..top dimension.
template <CoefficientField Field>
std::vector<long> reduced_betti(const SignedBoundary& b, const Field& field) {
  const std::size_t top = b.counts.size();  // dimensions 0..top-1
  std::vector<long> ranks(top + 1, 0);     // ranks[d] = rank of ∂_d : C_d -> C_{d-1}
  const bool has_vertices = top > 0 && b.counts[0] > 0;
  if (b.augmented && has_vertices) ranks[0] = 1;
  // Top-down with clearing: a pivot row of the reduced ∂_{d+1} names a column
  // of ∂_d that reduces to zero because ∂² = 0, so it is left out.
  std::vector<char> cleared;
  for (std::size_t d = top; d-- > 1;) {
    const auto pivots = reduce_columns(field, static_cast<int>(b.counts[d - 1]), static_cast<int>(b.counts[d]),
                                       [&](int c, auto& col) {
                                         const auto cc = static_cast<std::size_t>(c);
                                         if (!cleared.empty() && cleared[cc]) return;
                                         const auto [first, last] = b.column(d, cc);
                                         for (std::size_t k = first; k < last; ++k) {
                                           col.emplace_back(b.entries[d][k].first,
                                                            field.from_int(b.entries[d][k].second));
                                         }
                                       });
    ranks[d] = static_cast<long>(pivots.size());
    cleared.assign(b.counts[d - 1], 0);
    for (int r : pivots) cleared[static_cast<std::size_t>(r)] = 1;
  }
  std::vector<long> out(top + 1, 0);
  out[0] = (b.augmented ? 1 : 0) - ranks[0];
  for (std::size_t d = 0; d < top; ++d) {
    out[d + 1] = static_cast<long>(b.counts[d]) - ranks[d] - ranks[d + 1];
  }
  return out;
}

}  // namespace tmi

#endif  // TMI_HOMOLOGY_HPP
