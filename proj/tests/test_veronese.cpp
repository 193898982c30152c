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


#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "tmi/veronese.hpp"

namespace tmi {
namespace {

Monomial M(const std::string& s) { return parse_monomial(s); }

// Squarefree monomials of degree t in x_1..x_m (one variable per block).
std::vector<Monomial> squarefree_of_degree(int m, int t) {
  std::vector<Monomial> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (__builtin_popcount(s) != t) continue;
    std::vector<VarId> vs;
    for (int i = 0; i < m; ++i) {
      if (s & (1u << i)) vs.push_back(veronese_var(i + 1));
    }
    out.push_back(Monomial::product_of(vs));
  }
  return out;
}

TEST(Depolarize, Examples) {
  EXPECT_EQ(depolarize(M("x[1]*x[3]*x[4]"), 4, 3), M("x[1]*x[2]^2"));
  EXPECT_EQ(depolarize(M("x[1]*x[2]*x[3]"), 5, 3), M("x[1]^3"));
  EXPECT_EQ(depolarize(M("x[3]*x[4]*x[5]"), 5, 3), M("x[3]^3"));
  EXPECT_EQ(polarize(M("x[1]*x[2]^2"), 4, 3), M("x[1]*x[3]*x[4]"));
  EXPECT_EQ(polarize(M("x[2]"), 3, 1), M("x[2]"));
}

TEST(Depolarize, BijectionOntoThePowerProperty) {
  for (int m = 1; m <= 8; ++m) {
    for (int t = 1; t <= m; ++t) {
      const int s = m - t + 1;
      std::set<Monomial> image;
      for (const Monomial& x : squarefree_of_degree(m, t)) {
        const Monomial y = depolarize(x, m, t);
        EXPECT_EQ(polarize(y, m, t), x) << to_string(x);
        image.insert(y);
      }
      const auto power = power_of_maximal_ideal(s, t).gens();
      EXPECT_EQ(std::vector<Monomial>(image.begin(), image.end()), power) << m << " " << t;
    }
  }
}

TEST(Depolarize, Errors) {
  EXPECT_THROW(depolarize(M("x[1]^2*x[2]"), 4, 3), ParameterError);
  EXPECT_THROW(depolarize(M("x[1]*x[2]"), 4, 3), ParameterError);
  EXPECT_THROW(depolarize(M("x[1]*x[5]"), 4, 2), ParameterError);
  EXPECT_THROW(polarize(M("x[1]"), 4, 2), ParameterError);
  EXPECT_THROW(polarize(M("x[4]^2"), 4, 2), ParameterError);
}

TEST(Depolarize, TextForm) {
  const Monomial y = depolarize(M("x[1]*x[3]*x[4]"), 4, 3);
  EXPECT_EQ(veronese_string(y, 'y'), "y[1]*y[2]^2");
  EXPECT_EQ(parse_monomial(veronese_string(y, 'y')), y);
}

TEST(PowerOfMaximalIdeal, Counts) {
  EXPECT_EQ(power_of_maximal_ideal(2, 2).size(), 3u);
  EXPECT_EQ(power_of_maximal_ideal(3, 3).size(), 10u);
  EXPECT_EQ(static_cast<long>(power_of_maximal_ideal(4, 3).size()), binomial(6, 3));
}

TEST(VeroneseChecks, AllPassProperty) {
  for (int m = 1; m <= 8; ++m) {
    for (int t = 1; t <= m; ++t) {
      const auto report = veronese_checks(m, t);
      EXPECT_TRUE(report.passed()) << m << " " << t;
      EXPECT_EQ(report.checks.size(), 7u);
      for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << m << " " << t << " " << c.name;
    }
  }
}

TEST(VeroneseChecks, FVectorExample) {
  EXPECT_EQ(veronese_checks(4, 2).f, (std::vector<std::size_t>{6, 8, 3}));
}

}  // namespace
}  // namespace tmi
