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

// Builders for the complex Γ_{n,t} supporting the minimal free resolution of
// the transversal ideal I_{n,t}.
#ifndef TMI_GAMMA_HPP
#define TMI_GAMMA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tmi/complex.hpp"
#include "tmi/error.hpp"
#include "tmi/monomial.hpp"

namespace tmi {

// Δ(P_1) × ... × Δ(P_n); requires t = n.
inline LabeledComplex gamma_full(const BlockConfig& cfg) {
  if (cfg.t() != cfg.n()) throw ParameterError("gamma_full requires t = n");
  std::vector<Factor> factors;
  for (int j = 1; j <= cfg.n(); ++j) factors.push_back(block_variables(cfg, j, j));
  return LabeledComplex::closure({Cell(std::move(factors))}, static_cast<std::size_t>(cfg.n()));
}

// One gluing step of the recursion for Γ_{n,t}: the complex glued so far, the
// new summand Γ_{i,t-1} × Δ(Q_{i+1}) and their overlap.
struct GammaStep {
  int i = 0;
  LabeledComplex before;
  LabeledComplex piece;
  LabeledComplex overlap;
};

// Γ_{i,q} on the first i blocks of a fixed configuration, memoized by (i, q).
class GammaBuilder {
 public:
  explicit GammaBuilder(BlockConfig cfg) : cfg_(std::move(cfg)) {}

  const LabeledComplex& build(int i, int q) {
    if (q < 1 || q > i || i > cfg_.n()) {
      throw ParameterError("gamma needs 1 <= t <= n, got n=" + std::to_string(i) + " t=" + std::to_string(q));
    }
    const auto key = std::make_pair(i, q);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LabeledComplex result;
    if (q == 1) {
      result = simplex(block_variables(cfg_, 1, i));
    } else if (q == i) {
      result = gamma_full(cfg_.prefix(i, q));
    } else {
      result = LabeledComplex(static_cast<std::size_t>(q));
      for (int j = q - 1; j <= i - 1; ++j) result = glue(result, summand(j, q, i));
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  // Γ_{j,q-1} × Δ(Q_{j+1}(i)).
  LabeledComplex summand(int j, int q, int i) {
    return product(build(j, q - 1), simplex(block_variables(cfg_, j + 1, i)));
  }

  std::vector<GammaStep> steps() {
    std::vector<GammaStep> out;
    const int n = cfg_.n();
    const int t = cfg_.t();
    if (t == 1) return out;
    LabeledComplex so_far(static_cast<std::size_t>(t));
    for (int i = t - 1; i <= n - 1; ++i) {
      GammaStep step;
      step.i = i;
      step.before = so_far;
      step.piece = summand(i, t, n);
      step.overlap = intersect(step.before, step.piece);
      so_far = glue(so_far, step.piece);
      out.push_back(std::move(step));
    }
    return out;
  }

 private:
  BlockConfig cfg_;
  std::map<std::pair<int, int>, LabeledComplex> memo_;
};

// Γ_{n,t} = ∪_{i=t-1}^{n-1} Γ_{i,t-1} × Δ(Q_{i+1}), with Γ_{k,1} the simplex on
// the first k blocks and Γ_{k,k} the full product. Summands are glued in
// increasing i.
inline LabeledComplex gamma(const BlockConfig& cfg) {
  GammaBuilder builder(cfg);
  return builder.build(cfg.n(), cfg.t());
}

inline std::vector<GammaStep> gamma_steps(const BlockConfig& cfg) {
  GammaBuilder builder(cfg);
  return builder.steps();
}

// Maximal cells of Γ_{n,t} in closed form: one product of simplices per way of
// cutting the blocks 1..n into t consecutive nonempty intervals.
inline std::vector<Cell> gamma_closed_maximal_cells(const BlockConfig& cfg) {
  std::vector<Cell> out;
  std::vector<int> cuts;  // last block of each interval but the final one
  auto recurse = [&](auto&& self, int first_block) -> void {
    const int placed = static_cast<int>(cuts.size());
    if (placed == cfg.t() - 1) {
      std::vector<Factor> factors;
      int start = 1;
      for (int c : cuts) {
        factors.push_back(block_variables(cfg, start, c));
        start = c + 1;
      }
      factors.push_back(block_variables(cfg, start, cfg.n()));
      out.emplace_back(std::move(factors));
      return;
    }
    const int remaining = cfg.t() - 1 - placed;
    for (int c = first_block; c <= cfg.n() - remaining; ++c) {
      cuts.push_back(c);
      self(self, c + 1);
      cuts.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

inline LabeledComplex gamma_closed(const BlockConfig& cfg) {
  return LabeledComplex::closure(gamma_closed_maximal_cells(cfg), static_cast<std::size_t>(cfg.t()));
}

// ∪_{i=1}^{n-1} Δ(P_1) × ... × Δ(P_i + P_{i+1}) × ... × Δ(P_n); requires t = n-1.
inline LabeledComplex gamma_nminus1(const BlockConfig& cfg) {
  if (cfg.t() != cfg.n() - 1) throw ParameterError("gamma_nminus1 requires t = n - 1");
  std::vector<Cell> tops;
  for (int i = 1; i <= cfg.n() - 1; ++i) {
    std::vector<Factor> factors;
    for (int j = 1; j <= cfg.n(); ++j) {
      if (j == i) {
        factors.push_back(block_variables(cfg, i, i + 1));
        ++j;
      } else {
        factors.push_back(block_variables(cfg, j, j));
      }
    }
    tops.emplace_back(std::move(factors));
  }
  return LabeledComplex::closure(tops, static_cast<std::size_t>(cfg.t()));
}

}  // namespace tmi

#endif  // TMI_GAMMA_HPP
