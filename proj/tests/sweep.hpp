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

// Desk-scale sweep shared by the property and acceptance suites: every
// block-size vector (in any order) with m = b_1 + ... + b_n <= max_m, and
// every t.
#ifndef TMI_TESTS_SWEEP_HPP
#define TMI_TESTS_SWEEP_HPP

#include <vector>

#include "tmi/monomial.hpp"

namespace tmi::testing {

inline std::vector<std::vector<int>> compositions_up_to(int max_m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (!current.empty()) out.push_back(current);
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      self(self, remaining - p);
      current.pop_back();
    }
  };
  recurse(recurse, max_m);
  return out;
}

inline std::vector<BlockConfig> sweep(int max_m, int max_n = 64) {
  std::vector<BlockConfig> out;
  for (const auto& b : compositions_up_to(max_m)) {
    const int n = static_cast<int>(b.size());
    if (n > max_n) continue;
    for (int t = 1; t <= n; ++t) out.emplace_back(n, t, b);
  }
  return out;
}

inline std::string describe(const BlockConfig& cfg) {
  std::string s = "n=" + std::to_string(cfg.n()) + " t=" + std::to_string(cfg.t()) + " b=";
  for (std::size_t i = 0; i < cfg.sizes().size(); ++i) s += (i ? "," : "") + std::to_string(cfg.sizes()[i]);
  return s;
}

}  // namespace tmi::testing

#endif  // TMI_TESTS_SWEEP_HPP
